#include "csf/orientations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace csf {

std::vector<std::vector<int>> Orientation::out_neighbors() const {
    std::vector<std::vector<int>> out(n);
    for (const auto& [tail, head] : arcs) out[tail].push_back(head);
    return out;
}

bool Orientation::is_acyclic() const {
    auto out = out_neighbors();
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::function<bool(int)> dfs = [&](int v) {
        state[v] = 1;
        for (int u : out[v]) {
            if (state[u] == 1) return false;
            if (state[u] == 0 && !dfs(u)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (int v = 0; v < n; ++v)
        if (state[v] == 0 && !dfs(v)) return false;
    return true;
}

std::vector<int> Orientation::sinks_within(const std::vector<bool>& alive) const {
    std::vector<bool> has_out(n, false);
    for (const auto& [tail, head] : arcs)
        if (alive[tail] && alive[head]) has_out[tail] = true;
    std::vector<int> sinks;
    for (int v = 0; v < n; ++v)
        if (alive[v] && !has_out[v]) sinks.push_back(v);
    return sinks;
}

std::string Orientation::to_string(const SetWeightedGraph& g) const {
    std::string s;
    for (size_t i = 0; i < arcs.size(); ++i) {
        if (i) s += ",";
        s += g.vertices[arcs[i].first].id + "->" + g.vertices[arcs[i].second].id;
    }
    return s;
}

void for_each_acyclic(const SetWeightedGraph& g,
                      const std::function<void(const Orientation&)>& fn) {
    if (g.has_loop()) return;
    std::set<std::pair<int, int>> uniq;
    for (const auto& [a, b] : g.edges)
        if (a != b) uniq.emplace(a, b);
    std::vector<std::pair<int, int>> simple(uniq.begin(), uniq.end());
    int m = static_cast<int>(simple.size());
    if (m > 30) throw std::runtime_error("for_each_acyclic: too many distinct edges");

    Orientation o;
    o.n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        o.arcs.clear();
        for (int e = 0; e < m; ++e) {
            auto [a, b] = simple[e];
            if (mask >> e & 1)
                o.arcs.emplace_back(b, a);
            else
                o.arcs.emplace_back(a, b);
        }
        if (o.is_acyclic()) fn(o);
    }
}

std::vector<Orientation> acyclic_orientations(const SetWeightedGraph& g) {
    std::vector<Orientation> out;
    for_each_acyclic(g, [&](const Orientation& o) { out.push_back(o); });
    return out;
}

SinkDecomposition sink_decomposition(const SetWeightedGraph& g, const Orientation& o) {
    if (!o.is_acyclic()) throw std::invalid_argument("sink_decomposition: orientation has a cycle");
    int n = o.n;

    SinkDecomposition dec;
    dec.level_of.assign(n, 0);

    // Route 1: iterated sink deletion.
    std::vector<bool> alive(n, true);
    int remaining = n;
    while (remaining > 0) {
        std::vector<int> sinks = o.sinks_within(alive);
        for (int v : sinks) {
            alive[v] = false;
            dec.level_of[v] = dec.level_count() + 1;
        }
        remaining -= static_cast<int>(sinks.size());
        dec.levels.push_back(std::move(sinks));
    }

    // Route 2: vertex count of the longest outgoing directed path.
    auto out = o.out_neighbors();
    std::vector<int> depth(n, 0);
    std::function<int(int)> longest = [&](int v) {
        if (depth[v]) return depth[v];
        int best = 1;
        for (int u : out[v]) best = std::max(best, 1 + longest(u));
        return depth[v] = best;
    };
    for (int v = 0; v < n; ++v)
        if (longest(v) != dec.level_of[v])
            throw std::logic_error("sink level disagreement between deletion and longest-path");

    std::vector<int> type_parts;
    for (const auto& level : dec.levels) {
        dec.counts.push_back(static_cast<int>(level.size()));
        int w = 0;
        for (int v : level) w += g.weight(v);
        type_parts.push_back(w);
    }
    dec.type_seq = IntegerSequence(std::move(type_parts));
    return dec;
}

std::map<int, long long> count_by_sink_count(const SetWeightedGraph& g) {
    std::map<int, long long> histogram;
    std::vector<bool> all(g.vertex_count(), true);
    for_each_acyclic(g, [&](const Orientation& o) {
        histogram[static_cast<int>(o.sinks_within(all).size())] += 1;
    });
    return histogram;
}

}  // namespace csf
