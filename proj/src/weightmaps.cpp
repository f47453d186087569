#include "csf/weightmaps.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace csf {

namespace {

Int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

int sign_pow(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace

std::vector<int> StepWeightMap::weight_sequence() const {
    std::vector<int> wts(levels(), 0);
    for (const auto& per_vertex : steps)
        for (int i = 0; i < static_cast<int>(per_vertex.size()); ++i)
            wts[i] += static_cast<int>(per_vertex[i].size());
    return wts;
}

bool is_valid_step_map(const SetWeightedGraph& g, const StepWeightMap& s) {
    if (static_cast<int>(s.steps.size()) != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::set<int> used;
        const auto& omega = g.vertices[v].omega;
        for (const auto& level : s.steps[v])
            for (int label : level) {
                if (!std::binary_search(omega.begin(), omega.end(), label)) return false;
                if (!used.insert(label).second) return false;
            }
    }
    return true;
}

bool is_admissible(const SetWeightedGraph& g, const Orientation& o, const StepWeightMap& s) {
    int n = g.vertex_count();
    int levels = s.levels();
    std::vector<bool> alive(n, true);
    std::vector<int> rem(n);
    for (int v = 0; v < n; ++v) rem[v] = g.weight(v);

    for (int i = 0; i < levels; ++i) {
        std::vector<int> sinks = o.sinks_within(alive);
        std::vector<bool> is_sink(n, false);
        for (int v : sinks) is_sink[v] = true;
        for (int v = 0; v < n; ++v) {
            bool nonempty = !s.steps[v][i].empty();
            if (nonempty != (alive[v] && is_sink[v])) return false;
        }
        for (int v : sinks) {
            rem[v] -= static_cast<int>(s.steps[v][i].size());
            if (rem[v] == 0) alive[v] = false;
        }
    }
    return true;
}

bool is_standard_form(const SetWeightedGraph& g, const Orientation& o, const StepWeightMap& s) {
    int levels = s.levels();
    SinkDecomposition dec = sink_decomposition(g, o);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int i = 1; i < levels; ++i) {  // levels 1..l, 1-based
            const auto& chosen = s.steps[v][i - 1];
            if (dec.level_of[v] == i) {
                if (static_cast<int>(chosen.size()) != g.weight(v)) return false;
            } else if (!chosen.empty()) {
                return false;
            }
        }
        bool last_nonempty = !s.steps[v][levels - 1].empty();
        if (last_nonempty != (dec.level_of[v] == levels)) return false;
    }
    return true;
}

void for_each_step_map(const SetWeightedGraph& g, const std::vector<int>& targets,
                       const std::function<void(const StepWeightMap&)>& fn) {
    int n = g.vertex_count();
    int levels = static_cast<int>(targets.size());
    StepWeightMap map;
    map.steps.assign(n, std::vector<std::vector<int>>(levels));
    std::vector<std::uint32_t> rem(n);
    for (int v = 0; v < n; ++v) {
        if (g.weight(v) > 20) throw std::runtime_error("for_each_step_map: vertex weight too large");
        rem[v] = (std::uint32_t(1) << g.weight(v)) - 1;
    }

    std::function<void(int)> do_level = [&](int level) {
        if (level == levels) {
            fn(map);
            return;
        }
        std::function<void(int, int)> do_vertex = [&](int v, int need) {
            if (v == n) {
                if (need == 0) do_level(level + 1);
                return;
            }
            int capacity_after = 0;
            for (int u = v + 1; u < n; ++u) capacity_after += std::popcount(rem[u]);
            std::uint32_t pool = rem[v];
            // All submasks of the remaining labels, empty included.
            std::uint32_t sub = 0;
            while (true) {
                int size = std::popcount(sub);
                if (size <= need && need - size <= capacity_after) {
                    map.steps[v][level].clear();
                    for (int bit = 0; bit < g.weight(v); ++bit)
                        if (sub >> bit & 1) map.steps[v][level].push_back(g.vertices[v].omega[bit]);
                    rem[v] = pool & ~sub;
                    do_vertex(v + 1, need - size);
                    rem[v] = pool;
                }
                if (sub == pool) break;
                sub = (sub - pool) & pool;
            }
            map.steps[v][level].clear();
        };
        do_vertex(0, targets[level]);
    };
    do_level(0);
}

namespace {

// Shared recursion for the two admissible-map counters. `explicit_subsets`
// switches between binomial profile counting and explicit label subsets.
Int count_admissible_impl(const SetWeightedGraph& g, const Orientation& o,
                          const std::vector<int>& targets, bool explicit_subsets) {
    int n = g.vertex_count();
    std::vector<bool> alive(n, true);
    std::vector<int> rem(n);
    for (int v = 0; v < n; ++v) rem[v] = g.weight(v);

    std::function<Int(int)> do_level = [&](int level) -> Int {
        if (level == static_cast<int>(targets.size())) return 1;
        std::vector<int> sinks = o.sinks_within(alive);
        if (sinks.empty()) {
            for (size_t i = level; i < targets.size(); ++i)
                if (targets[i] != 0) return 0;
            return 1;
        }
        int t = targets[level];
        int ns = static_cast<int>(sinks.size());
        Int total = 0;
        std::vector<int> take(ns, 0);
        std::function<void(int, int, Int)> distribute = [&](int k, int left, Int ways) {
            if (k == ns) {
                if (left != 0) return;
                std::vector<int> saved_rem(ns);
                std::vector<bool> saved_alive(ns);
                for (int i = 0; i < ns; ++i) {
                    int v = sinks[i];
                    saved_rem[i] = rem[v];
                    saved_alive[i] = alive[v];
                    rem[v] -= take[i];
                    if (rem[v] == 0) alive[v] = false;
                }
                total += ways * do_level(level + 1);
                for (int i = 0; i < ns; ++i) {
                    int v = sinks[i];
                    rem[v] = saved_rem[i];
                    alive[v] = saved_alive[i];
                }
                return;
            }
            int capacity_after = 0;
            for (int i = k + 1; i < ns; ++i) capacity_after += rem[sinks[i]];
            int v = sinks[k];
            for (int c = 1; c <= std::min(rem[v], left); ++c) {
                if (left - c > capacity_after) continue;
                take[k] = c;
                distribute(k + 1, left - c, ways * (explicit_subsets ? Int(1) : binom(rem[v], c)));
            }
            take[k] = 0;
        };
        if (!explicit_subsets) {
            distribute(0, t, 1);
        } else {
            // Walk actual label choices; sizes drive the recursion, so pick
            // combinations of the remaining labels one sink at a time.
            std::function<void(int, int)> pick = [&](int k, int left) {
                if (k == ns) {
                    if (left != 0) return;
                    std::vector<int> saved_rem(ns);
                    std::vector<bool> saved_alive(ns);
                    for (int i = 0; i < ns; ++i) {
                        int v = sinks[i];
                        saved_rem[i] = rem[v];
                        saved_alive[i] = alive[v];
                        rem[v] -= take[i];
                        if (rem[v] == 0) alive[v] = false;
                    }
                    total += do_level(level + 1);
                    for (int i = 0; i < ns; ++i) {
                        int v = sinks[i];
                        rem[v] = saved_rem[i];
                        alive[v] = saved_alive[i];
                    }
                    return;
                }
                int v = sinks[k];
                // walk each subset of the remaining labels individually
                std::function<void(int, int)> comb = [&](int start, int chosen) {
                    if (chosen >= 1 && chosen <= left) {
                        take[k] = chosen;
                        pick(k + 1, left - chosen);
                        take[k] = 0;
                    }
                    for (int p = start; p < rem[v]; ++p) comb(p + 1, chosen + 1);
                };
                comb(0, 0);
            };
            pick(0, t);
        }
        return total;
    };
    return do_level(0);
}

void validate_theorem_range(const SetWeightedGraph& g, const IntegerPartition& mu, int j) {
    long long d = g.total_weight();
    if (j < 0) throw std::invalid_argument("j must be non-negative");
    if (mu.sum() + j > d) throw std::invalid_argument("|mu| + j exceeds the total weight");
    if (j == 0 && mu.sum() != d)
        throw std::invalid_argument("j = 0 requires |mu| to equal the total weight");
}

Int theorem_rhs_impl(const SetWeightedGraph& g, const IntegerPartition& mu, int j,
                     bool explicit_subsets) {
    validate_theorem_range(g, mu, j);
    std::vector<int> targets = mu.parts();
    targets.push_back(j);
    long long d = g.total_weight();
    int n = g.vertex_count();

    Int total = 0;
    for_each_acyclic(g, [&](const Orientation& o) {
        Int count = count_admissible_impl(g, o, targets, explicit_subsets);
        if (count == 0) return;
        SinkDecomposition dec = sink_decomposition(g, o);
        long long sink_sum = 0;
        for (int i = 1; i <= static_cast<int>(targets.size()); ++i) sink_sum += dec.count_at(i);
        total += count * sign_pow(mu.sum() + j - sink_sum);
    });
    return total * sign_pow(d - n);
}

}  // namespace

Int count_admissible_profile(const SetWeightedGraph& g, const Orientation& o,
                             const std::vector<int>& targets) {
    return count_admissible_impl(g, o, targets, false);
}

Int count_admissible_explicit(const SetWeightedGraph& g, const Orientation& o,
                              const std::vector<int>& targets) {
    return count_admissible_impl(g, o, targets, true);
}

Int theorem_rhs(const SetWeightedGraph& g, const IntegerPartition& mu, int j) {
    return theorem_rhs_impl(g, mu, j, false);
}

Int theorem_rhs_explicit(const SetWeightedGraph& g, const IntegerPartition& mu, int j) {
    return theorem_rhs_impl(g, mu, j, true);
}

Int one_level_rhs(const SetWeightedGraph& g, int j) {
    if (j < 1 || j > g.total_weight())
        throw std::invalid_argument("one_level_rhs: j out of range");
    return theorem_rhs(g, IntegerPartition{}, j);
}

std::vector<int> cycle_sinks(const std::vector<int>& omega, const std::vector<bool>& chosen) {
    int w = static_cast<int>(omega.size());
    std::vector<int> sinks;
    for (int p = 0; p < w; ++p) {
        if (chosen[p]) continue;
        if (chosen[(p + 1) % w]) sinks.push_back(omega[p]);
    }
    return sinks;
}

namespace {

struct ReceivingComponent {
    std::vector<int> uncovered;            // second-level sinks in this component
    std::vector<long long> pool_size_for;  // |T(B)| indexed by B submask - 1
};

// Enumerates every gamma-admissible generalized 2-step map for one
// orientation, grouped by (first-level size profile, receiving pattern).
// emit(mu_total, j_total, signed_count, profile_desc, pattern_desc);
// descriptions are only built when `labels` is set.
void process_orientation(const SetWeightedGraph& g, const Orientation& o, int mu_filter,
                         bool labels,
                         const std::function<void(int, int, const Int&, const std::string&,
                                                  const std::string&)>& emit) {
    int n = g.vertex_count();
    std::vector<bool> all_alive(n, true);
    std::vector<int> sinks = o.sinks_within(all_alive);
    if (sinks.empty()) return;
    int ns = static_cast<int>(sinks.size());
    for (int v : sinks)
        if (g.weight(v) > 20)
            throw std::runtime_error("conjecture enumeration: vertex weight too large");

    auto adj = g.adjacency();

    // chosen[v] flags over omega positions for each sink
    std::vector<std::vector<bool>> chosen(n);
    std::vector<int> take(ns, 0);

    // Arrangements with the same first-level size profile and the same
    // receiving pattern accumulate into one group per (mu, j).
    struct PatternAcc {
        std::map<std::pair<int, int>, Int> by_mu_j;
        std::string desc;
    };
    std::map<std::string, PatternAcc> groups;

    auto analyze_assignment = [&]() {
        int mu_total = 0;
        for (int i = 0; i < ns; ++i) mu_total += take[i];
        if (mu_filter >= 0 && mu_total != mu_filter) return;

        long long first_sign_exp = 0;
        std::vector<int> annihilated;
        int forced_j = 0;
        for (int i = 0; i < ns; ++i) {
            int v = sinks[i];
            first_sign_exp += take[i] - 1;
            if (take[i] == g.weight(v))
                annihilated.push_back(v);
            else
                forced_j += static_cast<int>(cycle_sinks(g.vertices[v].omega, chosen[v]).size());
        }

        // Second-level sinks uncovered by the annihilated set.
        std::vector<bool> alive(n, true);
        for (int v : annihilated) alive[v] = false;
        std::vector<bool> original_sink(n, false);
        for (int v : sinks) original_sink[v] = true;
        std::vector<int> uncovered;
        for (int v : o.sinks_within(alive))
            if (!original_sink[v]) uncovered.push_back(v);

        // Components of the induced graph on annihilated + uncovered.
        std::vector<bool> in_scope(n, false);
        for (int v : annihilated) in_scope[v] = true;
        for (int v : uncovered) in_scope[v] = true;
        std::vector<int> comp_of(n, -1);
        int comp_count = 0;
        for (int v = 0; v < n; ++v) {
            if (!in_scope[v] || comp_of[v] >= 0) continue;
            std::vector<int> stack{v};
            comp_of[v] = comp_count;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int u = 0; u < n; ++u)
                    if (in_scope[u] && comp_of[u] < 0 && adj[x][u]) {
                        comp_of[u] = comp_count;
                        stack.push_back(u);
                    }
            }
            ++comp_count;
        }

        // Components containing uncovered sinks must each receive exactly one
        // nonempty subset; annihilated-only components carry nothing.
        std::vector<ReceivingComponent> receiving;
        for (int c = 0; c < comp_count; ++c) {
            ReceivingComponent rc;
            for (int v : uncovered)
                if (comp_of[v] == c) rc.uncovered.push_back(v);
            if (rc.uncovered.empty()) continue;
            int u = static_cast<int>(rc.uncovered.size());
            rc.pool_size_for.assign((std::size_t(1) << u) - 1, 0);
            for (std::uint32_t bmask = 1; bmask < (std::uint32_t(1) << u); ++bmask) {
                long long wb = 0;
                long long wdb = 0;
                for (int i = 0; i < u; ++i)
                    if (bmask >> i & 1) wb += g.weight(rc.uncovered[i]);
                for (int v : annihilated) {
                    if (comp_of[v] != c) continue;
                    bool adjacent = false;
                    for (int i = 0; i < u && !adjacent; ++i)
                        if ((bmask >> i & 1) && adj[v][rc.uncovered[i]]) adjacent = true;
                    if (adjacent) wdb += g.weight(v);
                }
                // Weight drop: the pool shrinks to the annihilated neighbours'
                // weight when the chosen subset outweighs them.
                rc.pool_size_for[bmask - 1] = std::min(wb, wdb);
            }
            receiving.push_back(std::move(rc));
        }

        std::string profile_desc;
        if (labels) {
            std::ostringstream os;
            os << "S1 sizes:";
            for (int i = 0; i < ns; ++i)
                os << ' ' << g.vertices[sinks[i]].id << '=' << take[i];
            profile_desc = os.str();
        }

        // Product over receiving components of (B, subset size) choices.
        int nr = static_cast<int>(receiving.size());
        std::vector<std::pair<std::uint32_t, int>> pick(nr);
        std::function<void(int, int, Int, long long)> per_component =
            [&](int c, int j_acc, Int ways, long long sign_exp) {
                if (c == nr) {
                    std::string pattern_desc;
                    if (labels && nr > 0) {
                        std::ostringstream os;
                        for (int i = 0; i < nr; ++i) {
                            if (i) os << "; ";
                            os << "B={";
                            bool first = true;
                            for (int b = 0; b < static_cast<int>(receiving[i].uncovered.size()); ++b)
                                if (pick[i].first >> b & 1) {
                                    if (!first) os << ',';
                                    first = false;
                                    os << g.vertices[receiving[i].uncovered[b]].id;
                                }
                            os << "} s=" << pick[i].second;
                        }
                        pattern_desc = os.str();
                    }
                    Int value = ways * sign_pow(sign_exp);
                    auto& group = groups[profile_desc + "\x1f" + pattern_desc];
                    if (labels && group.desc.empty())
                        group.desc = pattern_desc.empty() ? profile_desc
                                                          : profile_desc + "; " + pattern_desc;
                    group.by_mu_j[{mu_total, j_acc}] += value;
                    return;
                }
                const auto& rc = receiving[c];
                int u = static_cast<int>(rc.uncovered.size());
                for (std::uint32_t bmask = 1; bmask < (std::uint32_t(1) << u); ++bmask) {
                    long long pool = rc.pool_size_for[bmask - 1];
                    int bsize = std::popcount(bmask);
                    for (int s = 1; s <= pool; ++s) {
                        pick[c] = {bmask, s};
                        per_component(c + 1, j_acc + s,
                                      ways * binom(static_cast<int>(pool), s),
                                      sign_exp + s - bsize);
                    }
                }
            };
        per_component(0, forced_j, 1, first_sign_exp);
    };

    std::function<void(int, int)> arrange = [&](int k, int used) {
        if (k == ns) {
            analyze_assignment();
            return;
        }
        int v = sinks[k];
        int w = g.weight(v);
        int capacity_after = 0;
        for (int i = k + 1; i < ns; ++i) capacity_after += g.weight(sinks[i]);
        for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << w); ++mask) {
            int size = std::popcount(mask);
            if (mu_filter >= 0) {
                if (used + size > mu_filter) continue;
                if (used + size + capacity_after < mu_filter) continue;
            }
            chosen[v].assign(w, false);
            for (int b = 0; b < w; ++b)
                if (mask >> b & 1) chosen[v][b] = true;
            take[k] = size;
            arrange(k + 1, used + size);
        }
        take[k] = 0;
    };
    arrange(0, 0);

    for (const auto& [key, group] : groups)
        for (const auto& [mj, value] : group.by_mu_j)
            if (value != 0) emit(mj.first, mj.second, value, group.desc, key);
}

void validate_conjecture_range(const SetWeightedGraph& g, int mu, int j) {
    long long d = g.total_weight();
    if (mu < 1 || mu > d) throw std::invalid_argument("mu out of range");
    if (j < 0 || j > d - mu) throw std::invalid_argument("j out of range");
    if (j == 0 && mu != d)
        throw std::invalid_argument("j = 0 requires mu to equal the total weight");
}

}  // namespace

Int conjecture_rhs(const SetWeightedGraph& g, int mu, int j) {
    validate_conjecture_range(g, mu, j);
    Int total = 0;
    for_each_acyclic(g, [&](const Orientation& o) {
        process_orientation(g, o, mu, false,
                            [&](int mt, int jt, const Int& value, const std::string&,
                                const std::string&) {
                                if (mt == mu && jt == j) total += value;
                            });
    });
    return total * sign_pow(g.total_weight() - g.vertex_count());
}

ConjectureBreakdown conjecture_breakdown(const SetWeightedGraph& g, int mu, int j) {
    validate_conjecture_range(g, mu, j);
    int outer = sign_pow(g.total_weight() - g.vertex_count());
    ConjectureBreakdown breakdown;
    breakdown.total = 0;
    for_each_acyclic(g, [&](const Orientation& o) {
        ConjectureOrientationBreakdown entry;
        entry.orientation = o.to_string(g);
        entry.subtotal = 0;
        process_orientation(g, o, mu, true,
                            [&](int mt, int jt, const Int& value, const std::string& desc,
                                const std::string&) {
                                if (mt != mu || jt != j) return;
                                Int signed_value = value * outer;
                                entry.contributions.push_back({desc, signed_value});
                                entry.subtotal += signed_value;
                            });
        breakdown.total += entry.subtotal;
        breakdown.per_orientation.push_back(std::move(entry));
    });
    return breakdown;
}

std::map<std::pair<int, int>, Int> conjecture_rhs_table(const SetWeightedGraph& g) {
    std::map<std::pair<int, int>, Int> table;
    for_each_acyclic(g, [&](const Orientation& o) {
        process_orientation(g, o, -1, false,
                            [&](int mt, int jt, const Int& value, const std::string&,
                                const std::string&) { table[{mt, jt}] += value; });
    });
    int outer = sign_pow(g.total_weight() - g.vertex_count());
    for (auto& [key, value] : table) value *= outer;
    return table;
}

}  // namespace csf
