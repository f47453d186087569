#include "csf/swgraph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace csf {

using nlohmann::json;

long long SetWeightedGraph::total_weight() const {
    long long d = 0;
    for (const auto& v : vertices) d += static_cast<long long>(v.omega.size());
    return d;
}

bool SetWeightedGraph::has_loop() const {
    for (const auto& [a, b] : edges)
        if (a == b) return true;
    return false;
}

long long SetWeightedGraph::weight_of(const std::vector<int>& vertex_set) const {
    long long w = 0;
    for (int v : vertex_set) w += weight(v);
    return w;
}

int SetWeightedGraph::find_vertex(const std::string& id) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices[i].id == id) return i;
    return -1;
}

std::vector<std::vector<bool>> SetWeightedGraph::adjacency() const {
    int n = vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : edges) adj[a][b] = adj[b][a] = true;
    return adj;
}

bool SetWeightedGraph::is_stable(const std::vector<int>& vertex_set) const {
    auto adj = adjacency();
    for (size_t i = 0; i < vertex_set.size(); ++i) {
        if (adj[vertex_set[i]][vertex_set[i]]) return false;  // loop vertex
        for (size_t k = i + 1; k < vertex_set.size(); ++k)
            if (adj[vertex_set[i]][vertex_set[k]]) return false;
    }
    return true;
}

SetWeightedGraph SetWeightedGraph::delete_edge(int edge_index) const {
    if (edge_index < 0 || edge_index >= edge_count())
        throw std::invalid_argument("delete_edge: no such edge");
    SetWeightedGraph g = *this;
    g.edges.erase(g.edges.begin() + edge_index);
    return g;
}

SetWeightedGraph SetWeightedGraph::contract_edge(int edge_index) const {
    if (edge_index < 0 || edge_index >= edge_count())
        throw std::invalid_argument("contract_edge: no such edge");
    auto [a, b] = edges[edge_index];
    if (a == b) return delete_edge(edge_index);

    SetWeightedGraph g;
    // Merged vertex replaces position a; b disappears.
    std::vector<int> remap(vertex_count(), 0);
    for (int v = 0, pos = 0; v < vertex_count(); ++v) {
        if (v == b) continue;
        Vertex nv = vertices[v];
        if (v == a) {
            nv.id = vertices[a].id + "+" + vertices[b].id;
            nv.omega.insert(nv.omega.end(), vertices[b].omega.begin(), vertices[b].omega.end());
            std::sort(nv.omega.begin(), nv.omega.end());
        }
        remap[v] = pos++;
        g.vertices.push_back(std::move(nv));
    }
    remap[b] = remap[a];

    for (int ei = 0; ei < edge_count(); ++ei) {
        if (ei == edge_index) continue;
        int u = remap[edges[ei].first], v = remap[edges[ei].second];
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return g;
}

SetWeightedGraph SetWeightedGraph::add_edge(int u, int v) const {
    SetWeightedGraph g = *this;
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
    return g;
}

SetWeightedGraph SetWeightedGraph::parse(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw GraphParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw GraphParseError("graph document must contain a \"vertices\" array");

    SetWeightedGraph g;
    std::set<int> seen_labels;
    int running_max = 0;
    for (const auto& jv : doc["vertices"]) {
        if (!jv.is_object() || !jv.contains("id") || !jv["id"].is_string())
            throw GraphParseError("vertex entry missing string field \"id\"");
        Vertex v;
        v.id = jv["id"].get<std::string>();
        if (g.find_vertex(v.id) >= 0) throw GraphParseError("duplicate vertex id \"" + v.id + "\"");
        bool has_omega = jv.contains("omega"), has_weight = jv.contains("weight");
        if (has_omega == has_weight)
            throw GraphParseError("vertex \"" + v.id +
                                  "\" must have exactly one of \"omega\" or \"weight\"");
        if (has_weight) {
            if (!jv["weight"].is_number_integer() || jv["weight"].get<long long>() < 1)
                throw GraphParseError("vertex \"" + v.id + "\": \"weight\" must be a positive integer");
            int w = jv["weight"].get<int>();
            for (int t = 1; t <= w; ++t) v.omega.push_back(running_max + t);
        } else {
            if (!jv["omega"].is_array() || jv["omega"].empty())
                throw GraphParseError("vertex \"" + v.id + "\": \"omega\" must be a nonempty array");
            for (const auto& jl : jv["omega"]) {
                if (!jl.is_number_integer() || jl.get<long long>() < 1)
                    throw GraphParseError("vertex \"" + v.id + "\": labels must be positive integers");
                v.omega.push_back(jl.get<int>());
            }
            std::sort(v.omega.begin(), v.omega.end());
        }
        for (int label : v.omega) {
            if (!seen_labels.insert(label).second)
                throw GraphParseError("label " + std::to_string(label) +
                                      " occurs in more than one vertex (at \"" + v.id + "\")");
            running_max = std::max(running_max, label);
        }
        g.vertices.push_back(std::move(v));
    }

    if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) throw GraphParseError("\"edges\" must be an array");
        for (const auto& je : doc["edges"]) {
            if (!je.is_array() || je.size() != 2 || !je[0].is_string() || !je[1].is_string())
                throw GraphParseError("each edge must be a pair of vertex ids");
            int u = g.find_vertex(je[0].get<std::string>());
            int v = g.find_vertex(je[1].get<std::string>());
            if (u < 0 || v < 0)
                throw GraphParseError("edge endpoint \"" +
                                      je[u < 0 ? 0 : 1].get<std::string>() +
                                      "\" is not a declared vertex");
            g.edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    return g;
}

std::string SetWeightedGraph::to_json_string() const {
    json doc;
    doc["vertices"] = json::array();
    for (const auto& v : vertices) {
        json jv;
        jv["id"] = v.id;
        jv["omega"] = v.omega;
        doc["vertices"].push_back(jv);
    }
    doc["edges"] = json::array();
    for (const auto& [a, b] : edges)
        doc["edges"].push_back(json::array({vertices[a].id, vertices[b].id}));
    return doc.dump();
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::pair<int, int>> collapsed_simple_edges(const SetWeightedGraph& g) {
    std::set<std::pair<int, int>> uniq;
    for (const auto& [a, b] : g.edges)
        if (a != b) uniq.emplace(a, b);
    return {uniq.begin(), uniq.end()};
}

}  // namespace

SymmetricFunction csf_p(const SetWeightedGraph& g) {
    int d = static_cast<int>(g.total_weight());
    SymmetricFunction out(Basis::P, d);
    if (g.has_loop()) return out;  // no proper colorings

    auto simple = collapsed_simple_edges(g);
    int m = static_cast<int>(simple.size());
    if (m > 30) throw std::runtime_error("csf_p: too many distinct edges for subset expansion");
    int n = g.vertex_count();

    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        UnionFind uf(n);
        int picked = 0;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) {
                uf.unite(simple[e].first, simple[e].second);
                ++picked;
            }
        std::map<int, int> comp_weight;
        for (int v = 0; v < n; ++v) comp_weight[uf.find(v)] += g.weight(v);
        std::vector<int> parts;
        parts.reserve(comp_weight.size());
        for (const auto& [root, w] : comp_weight) parts.push_back(w);
        out.add_term(IntegerPartition(std::move(parts)), (picked % 2 == 0) ? 1 : -1);
    }
    return out;
}

SymmetricFunction csf_p_deletion_contraction(const SetWeightedGraph& g) {
    int d = static_cast<int>(g.total_weight());
    if (g.has_loop()) return SymmetricFunction(Basis::P, d);
    int e = -1;
    for (int i = 0; i < g.edge_count(); ++i)
        if (g.edges[i].first != g.edges[i].second) {
            e = i;
            break;
        }
    if (e < 0) {
        std::vector<int> parts;
        for (int v = 0; v < g.vertex_count(); ++v) parts.push_back(g.weight(v));
        SymmetricFunction out(Basis::P, d);
        out.add_term(IntegerPartition(std::move(parts)), 1);
        return out;
    }
    SymmetricFunction left = csf_p_deletion_contraction(g.delete_edge(e));
    SymmetricFunction right = csf_p_deletion_contraction(g.contract_edge(e));
    left += right.scaled(-1);
    return left;
}

SymmetricFunction csf_e(const SetWeightedGraph& g) { return p_to_e(csf_p(g)); }

std::set<IntegerPartition> allowable_partitions(const SetWeightedGraph& g) {
    int n = g.vertex_count();
    if (n > 14) throw std::runtime_error("allowable_partitions: graph too large for enumeration");
    auto adj = g.adjacency();

    // All nonempty stable subsets as bitmasks.
    std::vector<std::uint32_t> stable;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            if (adj[i][i]) ok = false;
            for (int k = i + 1; k < n && ok; ++k)
                if ((mask >> k & 1) && adj[i][k]) ok = false;
        }
        if (ok) stable.push_back(mask);
    }
    std::vector<int> mask_weight(std::size_t(1) << n, 0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        int low = mask & -mask;
        int v = std::countr_zero(static_cast<std::uint32_t>(low));
        mask_weight[mask] = mask_weight[mask ^ low] + g.weight(v);
    }

    // Families of disjoint stable sets, memoized on the used-vertex mask.
    std::map<std::uint32_t, std::set<IntegerPartition>> memo;
    std::function<const std::set<IntegerPartition>&(std::uint32_t)> families =
        [&](std::uint32_t used) -> const std::set<IntegerPartition>& {
        auto it = memo.find(used);
        if (it != memo.end()) return it->second;
        std::set<IntegerPartition> result;
        result.insert(IntegerPartition{});
        for (std::uint32_t s : stable) {
            if (s & used) continue;
            for (const IntegerPartition& rest : families(used | s)) {
                std::vector<int> parts = rest.parts();
                parts.push_back(mask_weight[s]);
                result.insert(IntegerPartition(std::move(parts)));
            }
        }
        return memo.emplace(used, std::move(result)).first->second;
    };

    std::set<IntegerPartition> out = families(0);
    out.erase(IntegerPartition{});
    return out;
}

bool is_maximal(const SetWeightedGraph& g, const IntegerPartition& mu) {
    for (const auto& nu : allowable_partitions(g))
        if (!partially_dominates(mu, nu)) return false;
    return true;
}

std::vector<StablePair> stable_pairs(const SetWeightedGraph& g) {
    int n = g.vertex_count();
    if (n > 14) throw std::runtime_error("stable_pairs: graph too large for enumeration");
    auto adj = g.adjacency();

    std::vector<StablePair> out;
    // Each vertex is assigned to S, T, or neither.
    std::vector<int> side(n, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            std::vector<int> s, t;
            for (int i = 0; i < n; ++i) {
                if (side[i] == 1) s.push_back(i);
                if (side[i] == 2) t.push_back(i);
            }
            if (s.empty() || t.empty()) return;
            if (!g.is_stable(s) || !g.is_stable(t)) return;
            auto dominated = [&](const std::vector<int>& from, const std::vector<int>& to) {
                for (int a : from) {
                    bool covered = false;
                    for (int b : to)
                        if (adj[a][b]) {
                            covered = true;
                            break;
                        }
                    if (!covered) return false;
                }
                return true;
            };
            if (!dominated(s, t) || !dominated(t, s)) return;

            StablePair pair;
            pair.s_side = s;
            pair.t_side = t;
            std::vector<int> members = s;
            members.insert(members.end(), t.begin(), t.end());
            UnionFind uf(n);
            for (size_t i = 0; i < members.size(); ++i)
                for (size_t k = i + 1; k < members.size(); ++k)
                    if (adj[members[i]][members[k]]) uf.unite(members[i], members[k]);
            std::map<int, StablePair::Component> comps;
            for (int a : s) comps[uf.find(a)].s_part.push_back(a);
            for (int b : t) comps[uf.find(b)].t_part.push_back(b);
            for (auto& [root, comp] : comps) {
                comp.s_weight = g.weight_of(comp.s_part);
                comp.t_weight = g.weight_of(comp.t_part);
                pair.components.push_back(std::move(comp));
            }
            out.push_back(std::move(pair));
            return;
        }
        for (int choice = 0; choice < 3; ++choice) {
            side[v] = choice;
            rec(v + 1);
        }
        side[v] = 0;
    };
    rec(0);
    return out;
}

bool is_s_allowable(const SetWeightedGraph& g, int mu) {
    if (mu < 1) throw std::invalid_argument("is_s_allowable: mu must be positive");
    for (const auto& pair : stable_pairs(g)) {
        int k = static_cast<int>(pair.components.size());
        for (const auto& comp : pair.components) {
            long long lo = std::min(comp.s_weight, comp.t_weight) + 1;
            long long hi = std::max(comp.s_weight, comp.t_weight) - 1;
            if (lo > hi) continue;  // no integer strictly inside the window
            // The component's share f must land inside (min, max): with a
            // single component the composition forces f = mu; otherwise the
            // other components absorb the rest as long as each gets >= 1.
            bool violated = (k == 1) ? (lo <= mu && mu <= hi)
                                     : (lo <= std::min<long long>(hi, mu - (k - 1)));
            if (violated) return false;
        }
    }
    return true;
}

bool is_claw_free(const SetWeightedGraph& g) {
    int n = g.vertex_count();
    auto adj = g.adjacency();
    for (int c = 0; c < n; ++c) {
        std::vector<int> nb;
        for (int v = 0; v < n; ++v)
            if (v != c && adj[c][v]) nb.push_back(v);
        int deg = static_cast<int>(nb.size());
        for (int i = 0; i < deg; ++i)
            for (int k = i + 1; k < deg; ++k)
                for (int l = k + 1; l < deg; ++l)
                    if (!adj[nb[i]][nb[k]] && !adj[nb[i]][nb[l]] && !adj[nb[k]][nb[l]])
                        return false;
    }
    return true;
}

}  // namespace csf
