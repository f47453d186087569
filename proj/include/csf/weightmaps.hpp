// weightmaps.hpp
//
// Step weight maps: assignments of disjoint label subsets to levels, driven
// by the sink structure of an acyclic orientation. Two families:
//
//  * plain (l+1)-step maps, admissible when each level is supported exactly
//    on the current sinks of the residual graph (levels peel fully-emptied
//    vertices) — these feed the signed sum on the multi-part side;
//  * generalized 2-step maps, where surviving first-level sinks expose
//    second-level sinks inside their label cycle, annihilated sinks uncover
//    neighbouring second-level sinks, and each uncovered component picks a
//    single subset whose label pool may be truncated by the weight-drop rule.

#ifndef CSF_WEIGHTMAPS_HPP
#define CSF_WEIGHTMAPS_HPP

#include <string>
#include <vector>

#include "csf/orientations.hpp"
#include "csf/partitions.hpp"
#include "csf/swgraph.hpp"
#include "csf/symfunc.hpp"

namespace csf {

// steps[v][i] holds the labels vertex v spends at level i (0-based level).
struct StepWeightMap {
    std::vector<std::vector<std::vector<int>>> steps;

    int levels() const { return steps.empty() ? 0 : static_cast<int>(steps[0].size()); }
    std::vector<int> weight_sequence() const;
};

// Structural validity: per-vertex level sets are disjoint subsets of omega(v).
bool is_valid_step_map(const SetWeightedGraph& g, const StepWeightMap& s);

// Admissibility against an acyclic orientation: level i is nonempty exactly
// on the sinks of the residual graph left by levels < i.
bool is_admissible(const SetWeightedGraph& g, const Orientation& o, const StepWeightMap& s);

// Standard form: levels below the last fully empty their sink level; the
// last level is supported exactly on its sink level.
bool is_standard_form(const SetWeightedGraph& g, const Orientation& o, const StepWeightMap& s);

// Every structurally valid map with the given weight sequence, admissible or
// not. Exponential; intended for small test graphs.
void for_each_step_map(const SetWeightedGraph& g, const std::vector<int>& targets,
                       const std::function<void(const StepWeightMap&)>& fn);

// Number of admissible maps with the given weight sequence, counted by
// per-vertex binomial profiles (admissibility only sees subset sizes).
Int count_admissible_profile(const SetWeightedGraph& g, const Orientation& o,
                             const std::vector<int>& targets);
// Same count by explicit subset enumeration; reference oracle.
Int count_admissible_explicit(const SetWeightedGraph& g, const Orientation& o,
                              const std::vector<int>& targets);

// Signed sum over (acyclic orientation, admissible (l+1)-step map) pairs
// with weight sequence (mu_1..mu_l, j), including the global (-1)^{d-n}.
// Preconditions: |mu| + j <= d, j >= 0, and j = 0 only when |mu| = d.
Int theorem_rhs(const SetWeightedGraph& g, const IntegerPartition& mu, int j);
Int theorem_rhs_explicit(const SetWeightedGraph& g, const IntegerPartition& mu, int j);

// One-level special case: weight sequence (j).
Int one_level_rhs(const SetWeightedGraph& g, int j);

// Sinks remaining in the label cycle of a weighted vertex after deleting the
// chosen labels; `omega` sorted ascending, `chosen` flags parallel to it.
std::vector<int> cycle_sinks(const std::vector<int>& omega, const std::vector<bool>& chosen);

// Signed count of gamma-admissible generalized 2-step maps with weight
// sequence (mu, j), including the global (-1)^{d-n}. Preconditions:
// 1 <= mu <= d, 0 <= j <= d - mu, j = 0 only when mu = d.
Int conjecture_rhs(const SetWeightedGraph& g, int mu, int j);

struct ConjectureContribution {
    std::string label;  // first-level size profile, plus receiving sets if any
    Int value;          // includes the global sign
};
struct ConjectureOrientationBreakdown {
    std::string orientation;
    std::vector<ConjectureContribution> contributions;
    Int subtotal;
};
struct ConjectureBreakdown {
    Int total;
    std::vector<ConjectureOrientationBreakdown> per_orientation;
};
ConjectureBreakdown conjecture_breakdown(const SetWeightedGraph& g, int mu, int j);

// Full (mu, j) -> signed count table in one sweep (global sign included);
// used by the fuzz harness to avoid re-enumerating per query.
std::map<std::pair<int, int>, Int> conjecture_rhs_table(const SetWeightedGraph& g);

}  // namespace csf

#endif  // CSF_WEIGHTMAPS_HPP
