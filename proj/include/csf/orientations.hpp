// orientations.hpp
//
// Acyclic orientation enumeration and sink-level analysis. Orientations live
// on the simple collapse of the multigraph (parallel edges are forced to
// share a direction by acyclicity); a loop kills every orientation.

#ifndef CSF_ORIENTATIONS_HPP
#define CSF_ORIENTATIONS_HPP

#include <functional>
#include <map>
#include <vector>

#include "csf/swgraph.hpp"

namespace csf {

struct Orientation {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;  // tail -> head over collapsed edges

    std::vector<std::vector<int>> out_neighbors() const;
    bool is_acyclic() const;
    // Sinks among the `alive` subset, looking only at arcs inside it.
    std::vector<int> sinks_within(const std::vector<bool>& alive) const;
    std::string to_string(const SetWeightedGraph& g) const;
};

// Deterministic enumeration: collapsed edges sorted, direction bits counted
// lexicographically. Yields every acyclic orientation exactly once; a graph
// with a loop yields none.
void for_each_acyclic(const SetWeightedGraph& g, const std::function<void(const Orientation&)>& fn);
std::vector<Orientation> acyclic_orientations(const SetWeightedGraph& g);

struct SinkDecomposition {
    std::vector<std::vector<int>> levels;  // Sink_1, Sink_2, ...
    std::vector<int> counts;               // |Sink_i|
    IntegerSequence type_seq;              // total weight per level, in order
    std::vector<int> level_of;             // 1-based sink level per vertex

    int level_count() const { return static_cast<int>(levels.size()); }
    int count_at(int i) const {  // 1-based, 0 beyond the last level
        return (i >= 1 && i <= level_count()) ? counts[i - 1] : 0;
    }
};

// Computes sink levels both by iterated sink deletion and by longest
// outgoing directed path; the two routes must agree (checked internally).
// Throws std::invalid_argument if the orientation is not acyclic.
SinkDecomposition sink_decomposition(const SetWeightedGraph& g, const Orientation& o);

// Histogram: number of acyclic orientations by first-level sink count.
std::map<int, long long> count_by_sink_count(const SetWeightedGraph& g);

}  // namespace csf

#endif  // CSF_ORIENTATIONS_HPP
