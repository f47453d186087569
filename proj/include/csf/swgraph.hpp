// swgraph.hpp
//
// Set-weighted multigraphs: vertices carry disjoint finite label sets, edges
// form a multiset and may be loops. Provides deletion/contraction, the exact
// chromatic symmetric function (edge-subset expansion plus a
// deletion-contraction cross-check), and the stable-set machinery
// (allowable/maximal partitions, mutually dominating stable pairs,
// s-allowability, claw detection).

#ifndef CSF_SWGRAPH_HPP
#define CSF_SWGRAPH_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "csf/partitions.hpp"
#include "csf/symfunc.hpp"

namespace csf {

class GraphParseError : public std::runtime_error {
  public:
    explicit GraphParseError(const std::string& what) : std::runtime_error(what) {}
};

struct SetWeightedGraph {
    struct Vertex {
        std::string id;
        std::vector<int> omega;  // sorted ascending, disjoint across vertices
    };

    std::vector<Vertex> vertices;
    std::vector<std::pair<int, int>> edges;  // vertex indices, first <= second; loops allowed

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int weight(int v) const { return static_cast<int>(vertices[v].omega.size()); }
    long long total_weight() const;
    bool has_loop() const;
    long long weight_of(const std::vector<int>& vertex_set) const;

    int find_vertex(const std::string& id) const;  // -1 when absent

    // Simple adjacency (multiplicities ignored); adj[v][v] is true exactly
    // when v carries a loop.
    std::vector<std::vector<bool>> adjacency() const;
    bool is_stable(const std::vector<int>& vertex_set) const;

    SetWeightedGraph delete_edge(int edge_index) const;
    // Merges the endpoints of a non-loop edge (label sets union, other edges
    // redirected, parallel copies become loops); contracting a loop deletes it.
    SetWeightedGraph contract_edge(int edge_index) const;
    SetWeightedGraph add_edge(int u, int v) const;

    static SetWeightedGraph parse(const std::string& json_text);
    std::string to_json_string() const;
};

// Exact chromatic symmetric function in the P basis via the edge-subset
// expansion (multi-edges collapsed, loops short-circuit to zero).
SymmetricFunction csf_p(const SetWeightedGraph& g);

// Same function computed by the deletion-contraction recursion; retained as
// an independent oracle.
SymmetricFunction csf_p_deletion_contraction(const SetWeightedGraph& g);

SymmetricFunction csf_e(const SetWeightedGraph& g);

// All partitions realizable as the weight sequence of a family of disjoint
// nonempty stable sets.
std::set<IntegerPartition> allowable_partitions(const SetWeightedGraph& g);

// mu partially dominates every allowable partition.
bool is_maximal(const SetWeightedGraph& g, const IntegerPartition& mu);

// A pair of disjoint stable sets where each side dominates the other
// (every vertex has a neighbour across), split into the connected
// components of the induced subgraph.
struct StablePair {
    std::vector<int> s_side, t_side;
    struct Component {
        std::vector<int> s_part, t_part;
        long long s_weight = 0, t_weight = 0;
    };
    std::vector<Component> components;
};

std::vector<StablePair> stable_pairs(const SetWeightedGraph& g);

// Single-part admissibility gate for the generalized second-level rule: no
// mutually dominating stable pair admits a composition of mu that lands a
// part strictly inside some component's (min, max) weight window.
bool is_s_allowable(const SetWeightedGraph& g, int mu);

bool is_claw_free(const SetWeightedGraph& g);

}  // namespace csf

#endif  // CSF_SWGRAPH_HPP
