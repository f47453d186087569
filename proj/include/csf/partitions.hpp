// partitions.hpp
//
// Integer partitions (weakly decreasing positive tuples) and plain positive
// integer sequences, with the order-theoretic machinery the rest of the
// library leans on: transpose, dominance, partial dominance, and the
// padded +/- 1^k operations.

#ifndef CSF_PARTITIONS_HPP
#define CSF_PARTITIONS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace csf {

// A positive integer sequence, not necessarily sorted. Orientation types are
// order-sensitive, so this is deliberately a distinct type from
// IntegerPartition.
struct IntegerSequence {
    std::vector<int> parts;

    IntegerSequence() = default;
    explicit IntegerSequence(std::vector<int> p);

    int length() const { return static_cast<int>(parts.size()); }
    long long sum() const;
    bool empty() const { return parts.empty(); }

    std::string to_string() const;  // "3,1,2"; empty string for ()

    friend auto operator<=>(const IntegerSequence&, const IntegerSequence&) = default;
};

// Canonical integer partition: parts weakly decreasing, every part >= 1.
// Construction sorts and strips zeros; negative parts are rejected.
class IntegerPartition {
  public:
    IntegerPartition() = default;
    explicit IntegerPartition(std::vector<int> parts);

    static IntegerPartition parse(const std::string& text);  // "4,3,1"; "" -> empty

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based, 0-padded
    int length() const { return static_cast<int>(parts_.size()); }
    long long sum() const;
    bool empty() const { return parts_.empty(); }

    IntegerPartition transpose() const;
    IntegerSequence as_sequence() const { return IntegerSequence(parts_); }

    std::string to_string() const;

    friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;

  private:
    std::vector<int> parts_;
};

// True iff prefix sums of lhs weakly dominate those of rhs. Requires
// |lhs| == |rhs|; throws std::invalid_argument otherwise.
bool dominates(const IntegerPartition& lhs, const IntegerPartition& rhs);

// mu partially dominates nu: mu_i == nu_i on all of mu's coordinates
// (nu zero-padded), or some prefix sum of mu strictly exceeds nu's.
bool partially_dominates(const IntegerSequence& mu, const IntegerSequence& nu);
bool partially_dominates(const IntegerPartition& mu, const IntegerPartition& nu);

// Adds 1 to the first k parts, zero-padding to length k first.
IntegerPartition add_ones(const IntegerPartition& lambda, int k);

// Subtracts 1 from the first k parts, dropping zeros and re-sorting.
// Requires l(lambda) >= k; throws std::invalid_argument otherwise.
IntegerPartition subtract_ones(const IntegerPartition& lambda, int k);

// All partitions of exactly n, in ascending lexicographic order of the
// part vectors. partitions_of(0) == { empty }.
std::vector<IntegerPartition> partitions_of(int n);

// All partitions of 0..n inclusive.
std::vector<IntegerPartition> partitions_up_to(int n);

}  // namespace csf

#endif  // CSF_PARTITIONS_HPP
