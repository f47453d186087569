#include "csf/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace csf {

namespace {

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty part in partition string");
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad part '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::string join_parts(const std::vector<int>& parts) {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

}  // namespace

IntegerSequence::IntegerSequence(std::vector<int> p) : parts(std::move(p)) {
    for (int v : parts)
        if (v < 1) throw std::invalid_argument("sequence part must be positive");
}

long long IntegerSequence::sum() const {
    return std::accumulate(parts.begin(), parts.end(), 0LL);
}

std::string IntegerSequence::to_string() const { return join_parts(parts); }

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int v : parts_)
        if (v < 0) throw std::invalid_argument("partition part must be non-negative");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

IntegerPartition IntegerPartition::parse(const std::string& text) {
    return IntegerPartition(parse_parts(text));
}

long long IntegerPartition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

IntegerPartition IntegerPartition::transpose() const {
    std::vector<int> t;
    if (parts_.empty()) return IntegerPartition{};
    t.reserve(parts_[0]);
    for (int i = 1; i <= parts_[0]; ++i) {
        int count = 0;
        for (int p : parts_)
            if (p >= i) ++count;
        t.push_back(count);
    }
    return IntegerPartition(std::move(t));
}

std::string IntegerPartition::to_string() const { return join_parts(parts_); }

bool dominates(const IntegerPartition& lhs, const IntegerPartition& rhs) {
    if (lhs.sum() != rhs.sum())
        throw std::invalid_argument("dominance requires partitions of the same integer");
    long long acc_l = 0, acc_r = 0;
    for (int i = 0; i < rhs.length(); ++i) {
        acc_l += lhs.part(i);
        acc_r += rhs.part(i);
        if (acc_l < acc_r) return false;
    }
    return true;
}

bool partially_dominates(const IntegerSequence& mu, const IntegerSequence& nu) {
    bool all_equal = true;
    long long acc_mu = 0, acc_nu = 0;
    for (int i = 0; i < mu.length(); ++i) {
        int nu_i = i < nu.length() ? nu.parts[i] : 0;
        if (mu.parts[i] != nu_i) all_equal = false;
        acc_mu += mu.parts[i];
        acc_nu += nu_i;
        if (acc_mu > acc_nu) return true;
    }
    return all_equal;
}

bool partially_dominates(const IntegerPartition& mu, const IntegerPartition& nu) {
    return partially_dominates(mu.as_sequence(), nu.as_sequence());
}

IntegerPartition add_ones(const IntegerPartition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    std::vector<int> parts = lambda.parts();
    if (static_cast<int>(parts.size()) < k) parts.resize(k, 0);
    for (int i = 0; i < k; ++i) parts[i] += 1;
    return IntegerPartition(std::move(parts));
}

IntegerPartition subtract_ones(const IntegerPartition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (lambda.length() < k)
        throw std::invalid_argument("cannot subtract 1^k from a partition with fewer than k parts");
    std::vector<int> parts = lambda.parts();
    for (int i = 0; i < k; ++i) parts[i] -= 1;
    return IntegerPartition(std::move(parts));
}

std::vector<IntegerPartition> partitions_of(int n) {
    std::vector<IntegerPartition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            std::vector<int> parts = current;
            out.emplace_back(std::move(parts));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    if (n >= 0) rec(n, n == 0 ? 1 : n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntegerPartition> partitions_up_to(int n) {
    std::vector<IntegerPartition> out;
    for (int r = 0; r <= n; ++r) {
        auto p = partitions_of(r);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

}  // namespace csf
