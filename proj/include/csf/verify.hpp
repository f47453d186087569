// verify.hpp
//
// End-to-end verifiers: each statement's two sides are computed by disjoint
// code paths (the symmetric-function pipeline vs. direct enumeration) and
// compared exactly. A seeded generator sweeps random set-weighted graphs and
// reports any divergence as a structured potential counterexample.

#ifndef CSF_VERIFY_HPP
#define CSF_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "csf/swgraph.hpp"
#include "csf/weightmaps.hpp"

namespace csf {

enum class VerifyStatus { Pass, Fail, PreconditionUnmet };

std::string status_name(VerifyStatus s);  // "pass", "fail", "precondition-unmet"

struct VerificationReport {
    std::string statement;
    std::string graph;  // compact graph JSON
    std::string mu;     // partition string, empty when not applicable
    int j = -1;         // -1 when not applicable
    std::string lhs, rhs;
    VerifyStatus status = VerifyStatus::Pass;
    long long millis = 0;
    std::string detail;

    bool passed() const { return status == VerifyStatus::Pass; }
    bool failed() const { return status == VerifyStatus::Fail; }
};

std::string to_json_line(const VerificationReport& r);

// Sink-count identity: per k, the sum of c_lambda with l(lambda) = k equals
// the number of acyclic orientations with k sinks. Requires all weights 1.
VerificationReport verify_stanley_sinks(const SetWeightedGraph& g);

// sigma_{mu,j} against the signed (l+1)-step map count. Non-maximal mu or an
// out-of-range (mu, j) reports precondition-unmet.
VerificationReport verify_main_theorem(const SetWeightedGraph& g, const IntegerPartition& mu,
                                       int j);

// sigma_j against the one-step map count.
VerificationReport verify_one_level(const SetWeightedGraph& g, int j);

// Edgeless-graph and single-edge specializations of the generalized count.
VerificationReport verify_no_edge(const SetWeightedGraph& g, int mu, int j);
VerificationReport verify_one_edge_graph(const SetWeightedGraph& g, int mu, int j);

// sigma_{mu,j} against the generalized 2-step map count; non-s-allowable mu
// reports precondition-unmet, and a mismatch carries the per-orientation
// contribution breakdown in `detail`.
VerificationReport verify_conjecture(const SetWeightedGraph& g, int mu, int j);

struct FuzzConfig {
    std::uint64_t seed = 1;
    int trials = 10;
    int max_vertices = 4;
    int max_weight = 3;
    long long edge_prob_num = 1, edge_prob_den = 2;
    std::string statement = "conjecture";  // stanley | one-level | main | no-edge | one-edge | conjecture
};

// Deterministic per config. Statement-specific shaping: weight-1 graphs for
// stanley, edgeless for no-edge, a single weighted edge for one-edge.
SetWeightedGraph random_graph(std::mt19937_64& rng, const FuzzConfig& cfg);

// Generates `trials` graphs and sweeps every (mu, j) the statement speaks
// about, emitting one report per instance in deterministic order.
void fuzz(const FuzzConfig& cfg, const std::function<void(const VerificationReport&)>& sink);

}  // namespace csf

#endif  // CSF_VERIFY_HPP
