#include "doctest.h"

#include <random>

#include "csf/necklaces.hpp"
#include "csf/verify.hpp"
#include "csf/weightmaps.hpp"

using namespace csf;

namespace {

const char* kP575 = R"({"vertices":[{"id":"v1","weight":5},{"id":"v2","weight":7},
  {"id":"v3","weight":5}],"edges":[["v1","v2"],["v2","v3"]]})";

SetWeightedGraph unweighted(int n, const std::vector<std::pair<int, int>>& edges) {
    SetWeightedGraph g;
    for (int v = 0; v < n; ++v)
        g.vertices.push_back({"v" + std::to_string(v + 1), {v + 1}});
    for (auto [a, b] : edges) g.edges.emplace_back(std::min(a, b), std::max(a, b));
    return g;
}

SetWeightedGraph single_vertex(int weight) {
    SetWeightedGraph g;
    SetWeightedGraph::Vertex v;
    v.id = "v1";
    for (int t = 1; t <= weight; ++t) v.omega.push_back(t);
    g.vertices.push_back(v);
    return g;
}

Int binom_int(int n, int k) {
    Int r = 1;
    if (k < 0 || k > n) return 0;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

}  // namespace

TEST_CASE("theorem rhs on pinned instances") {
    SetWeightedGraph k3 = unweighted(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(theorem_rhs(k3, IntegerPartition({1, 1}), 1) == 6);
    CHECK(sigma(csf_e(k3), IntegerSequence({1, 1}), 1) == 6);

    for (int a = 1; a <= 5; ++a)
        CHECK(theorem_rhs(single_vertex(a), IntegerPartition({a}), 0) == 1);

    SetWeightedGraph p575 = SetWeightedGraph::parse(kP575);
    CHECK(theorem_rhs(p575, IntegerPartition({10}), 2) ==
          sigma(csf_e(p575), IntegerSequence({10}), 2));
}

TEST_CASE("theorem rhs rejects out-of-range queries") {
    SetWeightedGraph k3 = unweighted(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(theorem_rhs(k3, IntegerPartition({2}), 0), std::invalid_argument);
    CHECK_THROWS_AS(theorem_rhs(k3, IntegerPartition({3}), 1), std::invalid_argument);
}

TEST_CASE("profile and explicit engines agree") {
    std::mt19937_64 rng(77);
    FuzzConfig cfg;
    cfg.max_vertices = 4;
    cfg.max_weight = 3;
    for (int trial = 0; trial < 25; ++trial) {
        SetWeightedGraph g = random_graph(rng, cfg);
        if (g.total_weight() > 8) continue;
        int d = (int)g.total_weight();
        for (int r = 1; r <= d; ++r)
            for (const auto& mu : partitions_of(r)) {
                int j_lo = (r == d) ? 0 : 1;
                for (int j = j_lo; j <= d - r; ++j)
                    CHECK(theorem_rhs(g, mu, j) == theorem_rhs_explicit(g, mu, j));
            }
    }
}

TEST_CASE("one-level rhs equals sigma and the single-vertex closed form") {
    for (int a = 1; a <= 6; ++a) {
        SetWeightedGraph g = single_vertex(a);
        SymmetricFunction x = csf_e(g);
        for (int j = 1; j <= a; ++j) {
            Int expected = binom_int(a, j);
            if ((a - 1 + j - 1) % 2 == 1) expected = -expected;
            CHECK(one_level_rhs(g, j) == expected);
            CHECK(one_level_rhs(g, j) == sigma(x, IntegerSequence({j})));
        }
    }
    SetWeightedGraph k3 = unweighted(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(one_level_rhs(k3, 1) == 6);
}

TEST_CASE("unweighted theorem rhs counts sink-sequence prefixes") {
    std::mt19937_64 rng(15);
    FuzzConfig cfg;
    cfg.max_vertices = 5;
    cfg.statement = "stanley";
    for (int trial = 0; trial < 20; ++trial) {
        SetWeightedGraph g = random_graph(rng, cfg);
        int d = (int)g.total_weight();
        for (int r = 0; r <= std::min(d, 3); ++r)
            for (const auto& mu : partitions_of(r)) {
                bool ones = true;
                for (int part : mu.parts()) ones &= (part == 1);
                if (!ones) continue;
                int j_lo = (r == d) ? 0 : 1;
                for (int j = j_lo; j <= d - r; ++j) {
                    long long direct = 0;
                    for_each_acyclic(g, [&](const Orientation& o) {
                        SinkDecomposition dec = sink_decomposition(g, o);
                        for (int i = 0; i < mu.length(); ++i)
                            if (dec.count_at(i + 1) != mu.parts()[i]) return;
                        if (dec.count_at(mu.length() + 1) != j) return;
                        ++direct;
                    });
                    CHECK(theorem_rhs(g, mu, j) == direct);
                }
            }
    }
}

TEST_CASE("standard form equals admissibility under maximal mu") {
    std::mt19937_64 rng(404);
    FuzzConfig cfg;
    cfg.max_vertices = 4;
    cfg.max_weight = 3;
    int graphs_done = 0;
    while (graphs_done < 10) {
        SetWeightedGraph g = random_graph(rng, cfg);
        int d = (int)g.total_weight();
        if (d > 8) continue;
        ++graphs_done;
        auto orientations = acyclic_orientations(g);
        for (int r = 1; r <= d; ++r)
            for (const auto& mu : partitions_of(r)) {
                if (!is_maximal(g, mu)) continue;
                int j_lo = (r == d) ? 0 : 1;
                for (int j = j_lo; j <= d - r; ++j) {
                    std::vector<int> targets = mu.parts();
                    targets.push_back(j);
                    for_each_step_map(g, targets, [&](const StepWeightMap& s) {
                        REQUIRE(is_valid_step_map(g, s));
                        for (const auto& o : orientations)
                            CHECK(is_admissible(g, o, s) == is_standard_form(g, o, s));
                    });
                }
            }
    }
}

TEST_CASE("standard form spot checks") {
    // two vertices, v1 -> v2, weights 2 and 2
    SetWeightedGraph g;
    g.vertices.push_back({"v1", {1, 2}});
    g.vertices.push_back({"v2", {3, 4}});
    g.edges.emplace_back(0, 1);
    Orientation o;
    o.n = 2;
    o.arcs = {{0, 1}};  // sink v2, then v1

    StepWeightMap good;  // level 1 empties the sink, level 2 hits the next level
    good.steps = {{{}, {1}}, {{3, 4}, {}}};
    CHECK(is_valid_step_map(g, good));
    CHECK(is_standard_form(g, o, good));
    CHECK(is_admissible(g, o, good));

    StepWeightMap split;  // level-1 sink keeps a label back: not standard
    split.steps = {{{}, {}}, {{3}, {4}}};
    CHECK_FALSE(is_standard_form(g, o, split));

    StepWeightMap on_non_sink;  // level-1 weight on a non-sink
    on_non_sink.steps = {{{1}, {}}, {{3, 4}, {}}};
    CHECK_FALSE(is_standard_form(g, o, on_non_sink));
    CHECK_FALSE(is_admissible(g, o, on_non_sink));
}

TEST_CASE("exactly one admissible map when mu matches the type prefix") {
    std::mt19937_64 rng(55);
    FuzzConfig cfg;
    cfg.max_vertices = 4;
    cfg.max_weight = 3;
    for (int trial = 0; trial < 30; ++trial) {
        SetWeightedGraph g = random_graph(rng, cfg);
        for_each_acyclic(g, [&](const Orientation& o) {
            SinkDecomposition dec = sink_decomposition(g, o);
            for (int l = 1; l <= dec.type_seq.length(); ++l) {
                std::vector<int> targets(dec.type_seq.parts.begin(),
                                         dec.type_seq.parts.begin() + l);
                CHECK(count_admissible_profile(g, o, targets) == 1);

                // strictly exceeding some prefix kills every map
                std::vector<int> over = targets;
                over[l - 1] += 1;
                CHECK(count_admissible_profile(g, o, over) == 0);
            }
        });
    }
}

TEST_CASE("conjecture rhs reproduces the worked example") {
    SetWeightedGraph g = SetWeightedGraph::parse(kP575);
    CHECK(conjecture_rhs(g, 7, 3) == -65);

    ConjectureBreakdown bd = conjecture_breakdown(g, 7, 3);
    CHECK(bd.total == -65);

    // per-orientation contributions: the two-sink orientation gives -25 -25,
    // the middle-sink orientation 10 + 10 - 35, the two end-sink ones nothing
    std::multiset<std::multiset<long long>> seen;
    for (const auto& entry : bd.per_orientation) {
        std::multiset<long long> values;
        for (const auto& c : entry.contributions)
            values.insert(static_cast<long long>(c.value));
        seen.insert(values);
    }
    std::multiset<std::multiset<long long>> expected{
        {}, {}, {-25, -25}, {-35, 10, 10}};
    CHECK(seen == expected);
}

TEST_CASE("middle-sink orientation counts 35 drop-limited choices") {
    SetWeightedGraph g = SetWeightedGraph::parse(kP575);
    ConjectureBreakdown bd = conjecture_breakdown(g, 7, 3);
    bool found = false;
    for (const auto& entry : bd.per_orientation)
        for (const auto& c : entry.contributions)
            if (c.label.find("B={v1,v3}") != std::string::npos) {
                CHECK(c.value == -35);  // C(7,3) choices, each of sign -1
                found = true;
            }
    CHECK(found);
}

TEST_CASE("conjecture rhs on a single vertex") {
    for (int a = 1; a <= 6; ++a) {
        SetWeightedGraph g = single_vertex(a);
        CHECK(conjecture_rhs(g, a, 0) == 1);
        for (int mu = 1; mu < a; ++mu)
            for (int j = 1; j <= a - mu; ++j) {
                CHECK(conjecture_rhs(g, mu, j) ==
                      sigma(csf_e(g), IntegerSequence({mu}), j));
                CHECK(conjecture_rhs(g, mu, j) == signed_necklace_count(a, mu, j));
            }
    }
}

TEST_CASE("conjecture rhs rejects out-of-range queries") {
    SetWeightedGraph g = single_vertex(3);
    CHECK_THROWS_AS(conjecture_rhs(g, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(conjecture_rhs(g, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(conjecture_rhs(g, 2, 2), std::invalid_argument);
}

TEST_CASE("conjecture equals theorem for maximal single parts") {
    std::mt19937_64 rng(88);
    FuzzConfig cfg;
    cfg.max_vertices = 4;
    cfg.max_weight = 3;
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        SetWeightedGraph g = random_graph(rng, cfg);
        int d = (int)g.total_weight();
        for (int mu = 1; mu <= d; ++mu) {
            if (!is_maximal(g, IntegerPartition({mu}))) continue;
            int j_lo = (mu == d) ? 0 : 1;
            for (int j = j_lo; j <= d - mu; ++j) {
                CHECK(conjecture_rhs(g, mu, j) == theorem_rhs(g, IntegerPartition({mu}), j));
                ++checked;
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("conjecture rhs on edgeless graphs is the necklace convolution") {
    std::mt19937_64 rng(66);
    for (int trial = 0; trial < 20; ++trial) {
        FuzzConfig cfg;
        cfg.max_vertices = 3;
        cfg.max_weight = 4;
        cfg.statement = "no-edge";
        SetWeightedGraph g = random_graph(rng, cfg);
        int n = g.vertex_count();
        int d = (int)g.total_weight();
        for (int mu = 1; mu <= d; ++mu) {
            int j_lo = (mu == d) ? 0 : 1;
            for (int j = j_lo; j <= d - mu; ++j) {
                // direct convolution of per-vertex signed necklace counts
                Int total = 0;
                std::vector<int> ks(n), ls(n);
                std::function<void(int, int, int)> rec = [&](int v, int mu_left, int j_left) {
                    if (v == n) {
                        if (mu_left == 0 && j_left == 0) {
                            Int term = 1;
                            for (int i = 0; i < n; ++i)
                                term *= count_necklace(g.weight(i), ks[i], ls[i]);
                            if ((mu - n) % 2 == 1) term = -term;
                            total += term;
                        }
                        return;
                    }
                    for (int k = 1; k <= std::min(mu_left, g.weight(v)); ++k)
                        for (int l = 0; l <= j_left; ++l) {
                            ks[v] = k;
                            ls[v] = l;
                            rec(v + 1, mu_left - k, j_left - l);
                        }
                };
                rec(0, mu, j);
                if ((d - n) % 2 == 1) total = -total;
                CHECK(conjecture_rhs(g, mu, j) == total);
            }
        }
    }
}

TEST_CASE("pinned discrepancy: the stated definition diverges from sigma") {
    // Smallest known instance: an edge with weights (3,1) plus an isolated
    // weight-1 vertex. mu=3 is s-allowable on the union, but sigma_{3,1}
    // factors through the edge's mu=2 slice, which lies in the band
    // a < mu < b that the single-edge identity explicitly excludes.
    SetWeightedGraph small = SetWeightedGraph::parse(
        R"({"vertices":[{"id":"v1","weight":1},{"id":"v2","weight":3},
            {"id":"v3","weight":1}],"edges":[["v2","v3"]]})");
    REQUIRE(is_s_allowable(small, 3));
    CHECK(sigma(csf_e(small), IntegerSequence({3}), 1) == -1);
    CHECK(conjecture_rhs(small, 3, 1) == -3);

    // Smallest known connected instance: path with weights 3-1-1-2 at (4,1).
    SetWeightedGraph path = SetWeightedGraph::parse(
        R"({"vertices":[{"id":"v1","weight":1},{"id":"v2","weight":1},
            {"id":"v3","weight":2},{"id":"v4","weight":3}],
            "edges":[["v1","v2"],["v1","v4"],["v2","v3"]]})");
    REQUIRE(is_s_allowable(path, 4));
    CHECK(sigma(csf_e(path), IntegerSequence({4}), 1) == -2);
    CHECK(conjecture_rhs(path, 4, 1) == -4);
}

TEST_CASE("conjecture table matches pointwise queries") {
    std::mt19937_64 rng(3);
    FuzzConfig cfg;
    cfg.max_vertices = 4;
    cfg.max_weight = 3;
    for (int trial = 0; trial < 10; ++trial) {
        SetWeightedGraph g = random_graph(rng, cfg);
        int d = (int)g.total_weight();
        auto table = conjecture_rhs_table(g);
        for (int mu = 1; mu <= d; ++mu) {
            int j_lo = (mu == d) ? 0 : 1;
            for (int j = j_lo; j <= d - mu; ++j) {
                auto it = table.find({mu, j});
                Int from_table = (it == table.end()) ? Int(0) : it->second;
                CHECK(conjecture_rhs(g, mu, j) == from_table);
            }
        }
    }
}
