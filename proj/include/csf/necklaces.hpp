// necklaces.hpp
//
// Counting of size-mu subsets W of a directed a-cycle whose removal leaves
// exactly j arc components, the recurrence these counts satisfy, their link
// to the e-coefficient sums of power sums, and the piecewise one-edge
// identity built from them.

#ifndef CSF_NECKLACES_HPP
#define CSF_NECKLACES_HPP

#include <string>
#include <vector>

#include "csf/symfunc.hpp"

namespace csf {

// |{W subset of C_a : |W| = mu, C_a - W has j components}|. Memoized per a.
long long count_necklace(int a, int mu, int j);

// The subsets themselves, as sorted 1-based index lists.
std::vector<std::vector<int>> enumerate_necklace(int a, int mu, int j);

// Signed count T_{a,mu,j} = (-1)^{a+mu} |S_{a,mu,j}|.
long long signed_necklace_count(int a, int mu, int j);

struct NecklaceReport {
    bool pass = true;
    long long checks = 0;
    std::string first_counterexample;
};

// |S_{a,mu,j}| == |S_{a-1,mu-1,j}| + sum_{i=mu+j-2}^{a-2} |S_{i,mu-1,j-1}|
// for 3 <= a <= a_max, mu >= 2, j >= 1.
NecklaceReport verify_necklace_recurrence(int a_max);

// sigma_{mu,j}(p_a) == T_{a,mu,j} for a <= a_max across the valid range.
NecklaceReport verify_sigma_pa_identity(int a_max);

struct OneEdgeLemmaSides {
    long long lhs = 0;  // -|S_{a+b,mu,j}| + convolution of the two cycles
    long long rhs = 0;  // piecewise closed form
};

// Preconditions: a <= b; mu <= a or b <= mu <= a+b; 0 <= j <= a+b-mu with
// j = 0 only when mu = a+b. Throws std::invalid_argument outside the range.
OneEdgeLemmaSides one_edge_lemma_sides(int a, int b, int mu, int j);
NecklaceReport verify_one_edge_lemma(int a, int b, int mu, int j);

}  // namespace csf

#endif  // CSF_NECKLACES_HPP
