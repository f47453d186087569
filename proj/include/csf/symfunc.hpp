// symfunc.hpp
//
// Sparse exact arithmetic for homogeneous symmetric functions in the power
// sum (P), elementary (E) and monomial (M) bases, the basis conversions the
// chromatic pipeline needs (P->E via Newton's identity, E<->M via 0-1 matrix
// counts), and the e-coefficient prefix sums sigma_{mu,j}.

#ifndef CSF_SYMFUNC_HPP
#define CSF_SYMFUNC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>

#include "csf/partitions.hpp"

namespace csf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Basis { P, E, M, MAug };

std::string basis_name(Basis b);  // "p", "e", "m", "m~"

// Homogeneous symmetric function: exact integer coefficients on partitions
// of a fixed degree, zero coefficients never stored.
class SymmetricFunction {
  public:
    SymmetricFunction(Basis basis, int degree);

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const std::map<IntegerPartition, Int>& terms() const { return terms_; }

    Int coeff(const IntegerPartition& key) const;
    void add_term(const IntegerPartition& key, const Int& c);
    bool is_zero() const { return terms_.empty(); }

    SymmetricFunction& operator+=(const SymmetricFunction& other);
    SymmetricFunction scaled(const Int& factor) const;

    bool operator==(const SymmetricFunction&) const = default;

  private:
    Basis basis_;
    int degree_;
    std::map<IntegerPartition, Int> terms_;
};

SymmetricFunction p_basis_elem(const IntegerPartition& lambda);
SymmetricFunction e_basis_elem(const IntegerPartition& lambda);
SymmetricFunction m_basis_elem(const IntegerPartition& lambda);
// Augmented monomial: (prod_i n_i(lambda)!) m_lambda, returned in the M basis.
SymmetricFunction m_aug_basis_elem(const IntegerPartition& lambda);

// Exact basis conversions. Each validates the input basis.
SymmetricFunction p_to_e(const SymmetricFunction& f);
SymmetricFunction e_to_m(const SymmetricFunction& f);
// Triangular solve against the e_to_m transition; runs over exact rationals
// and throws std::runtime_error if the system is not solvable with integer
// coefficients (which would indicate an internal bug).
SymmetricFunction m_to_e(const SymmetricFunction& f);

// Number of 0-1 matrices with the given row and column sums; this is
// [m_mu] e_lambda. Memoized, exact.
Int count_01_matrices(const IntegerPartition& rows, const IntegerPartition& cols);

// Coefficient-sum query: prefix (mu_1..mu_l) pins the first l parts of the
// transpose; `next`, when present, additionally pins part l+1 (0 meaning the
// transpose has exactly l parts, allowed only when |prefix| equals the
// degree).
struct SigmaQuery {
    IntegerSequence prefix;
    std::optional<int> next;
};

// Sum of c_lambda over lambda whose transpose matches the query. f must be
// in the E basis. Returns 0 when nothing matches (e.g. prefix not weakly
// decreasing once extended).
Int sigma(const SymmetricFunction& f, const SigmaQuery& q);
Int sigma(const SymmetricFunction& f, const IntegerSequence& prefix);
Int sigma(const SymmetricFunction& f, const IntegerSequence& prefix, int next);

// Exhaustive check of the two m/e shift identities
//   [e_lambda] m_mu == [e_{lambda+1^k}] m_{(k,mu)}
//   sigma_{(k,nu)}(m_{(k,mu)}) == sigma_nu(m_mu)
// over all mu, lambda, nu, k in range (|mu| <= d_max, k <= d_max with
// k >= mu_1 and k >= nu_1).
struct LemmaSweepReport {
    bool pass = true;
    long long checks = 0;
    std::string first_counterexample;
};
LemmaSweepReport verify_m_e_shift_lemmas(int d_max);

// Stable serialization: terms sorted reverse-lexicographically.
std::string to_json_string(const SymmetricFunction& f);

}  // namespace csf

#endif  // CSF_SYMFUNC_HPP
