#include "csf/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace csf {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::P: return "p";
        case Basis::E: return "e";
        case Basis::M: return "m";
        case Basis::MAug: return "m~";
    }
    return "?";
}

SymmetricFunction::SymmetricFunction(Basis basis, int degree) : basis_(basis), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
}

Int SymmetricFunction::coeff(const IntegerPartition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Int(0) : it->second;
}

void SymmetricFunction::add_term(const IntegerPartition& key, const Int& c) {
    if (key.sum() != degree_)
        throw std::invalid_argument("partition size does not match function degree");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymmetricFunction& SymmetricFunction::operator+=(const SymmetricFunction& other) {
    if (basis_ != other.basis_ || degree_ != other.degree_)
        throw std::invalid_argument("cannot add functions of different basis or degree");
    for (const auto& [key, c] : other.terms_) add_term(key, c);
    return *this;
}

SymmetricFunction SymmetricFunction::scaled(const Int& factor) const {
    SymmetricFunction out(basis_, degree_);
    if (factor == 0) return out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, c * factor);
    return out;
}

namespace {

SymmetricFunction single_term(Basis b, const IntegerPartition& lambda, const Int& c) {
    SymmetricFunction f(b, static_cast<int>(lambda.sum()));
    f.add_term(lambda, c);
    return f;
}

Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// Product in the E basis: multiplying e_lambda * e_nu concatenates the index
// partitions.
SymmetricFunction e_product(const SymmetricFunction& f, const SymmetricFunction& g) {
    SymmetricFunction out(Basis::E, f.degree() + g.degree());
    for (const auto& [kf, cf] : f.terms())
        for (const auto& [kg, cg] : g.terms()) {
            std::vector<int> parts = kf.parts();
            parts.insert(parts.end(), kg.parts().begin(), kg.parts().end());
            out.add_term(IntegerPartition(std::move(parts)), cf * cg);
        }
    return out;
}

// E-expansion of p_a via Newton's identity, memoized.
const SymmetricFunction& power_sum_in_e(int a) {
    static std::mutex mu;
    static std::vector<SymmetricFunction> cache;  // cache[a]
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.emplace_back(single_term(Basis::E, IntegerPartition{}, 1));
    for (int b = static_cast<int>(cache.size()); b <= a; ++b) {
        SymmetricFunction acc(Basis::E, b);
        Int lead = (b % 2 == 1) ? Int(b) : Int(-b);
        acc.add_term(IntegerPartition({b}), lead);
        for (int i = 1; i <= b - 1; ++i) {
            Int sign = ((b - 1 + i) % 2 == 0) ? 1 : -1;
            SymmetricFunction prod =
                e_product(single_term(Basis::E, IntegerPartition({b - i}), sign), cache[i]);
            acc += prod;
        }
        cache.push_back(std::move(acc));
    }
    return cache[a];
}

}  // namespace

SymmetricFunction p_basis_elem(const IntegerPartition& lambda) {
    return single_term(Basis::P, lambda, 1);
}

SymmetricFunction e_basis_elem(const IntegerPartition& lambda) {
    return single_term(Basis::E, lambda, 1);
}

SymmetricFunction m_basis_elem(const IntegerPartition& lambda) {
    return single_term(Basis::M, lambda, 1);
}

SymmetricFunction m_aug_basis_elem(const IntegerPartition& lambda) {
    Int mult = 1;
    int run = 1;
    for (int i = 1; i <= lambda.length(); ++i) {
        if (i < lambda.length() && lambda.parts()[i] == lambda.parts()[i - 1]) {
            ++run;
        } else {
            mult *= factorial(run);
            run = 1;
        }
    }
    return single_term(Basis::M, lambda, mult);
}

SymmetricFunction p_to_e(const SymmetricFunction& f) {
    if (f.basis() != Basis::P) throw std::invalid_argument("p_to_e expects a P-basis function");
    SymmetricFunction out(Basis::E, f.degree());
    for (const auto& [lambda, c] : f.terms()) {
        SymmetricFunction prod = single_term(Basis::E, IntegerPartition{}, 1);
        for (int part : lambda.parts()) prod = e_product(prod, power_sum_in_e(part));
        out += prod.scaled(c);
    }
    return out;
}

namespace {

// Rows and columns are kept as sorted multisets; column order is irrelevant
// to the count, which keeps the memo table small.
using MatKey = std::pair<std::vector<int>, std::vector<int>>;

Int count01_impl(std::vector<int> rows, std::vector<int> cols,
                 std::map<MatKey, Int>& memo) {
    long long rsum = 0, csum = 0;
    for (int r : rows) rsum += r;
    for (int c : cols) csum += c;
    if (rsum != csum) return 0;
    if (cols.empty()) return rows.empty() ? Int(1) : Int(0);
    for (int r : rows)
        if (r > static_cast<int>(cols.size())) return 0;

    MatKey key{rows, cols};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Fill the largest remaining column: pick which rows receive a 1,
    // grouping equal row sums so the memo key stays canonical.
    int col = cols.back();
    cols.pop_back();
    std::vector<std::pair<int, int>> groups;  // (row value, multiplicity), descending
    for (int r : rows) {
        if (!groups.empty() && groups.back().first == r)
            groups.back().second++;
        else
            groups.emplace_back(r, 1);
    }

    Int total = 0;
    int ng = static_cast<int>(groups.size());
    std::vector<int> take(ng, 0);
    std::function<void(int, int, Int)> choose = [&](int gi, int left, Int ways) {
        if (gi == ng) {
            if (left != 0) return;
            std::vector<int> next_rows;
            for (int g = 0; g < ng; ++g) {
                int untouched = groups[g].second - take[g];
                for (int t = 0; t < untouched; ++t) next_rows.push_back(groups[g].first);
                for (int t = 0; t < take[g]; ++t)
                    if (groups[g].first - 1 > 0) next_rows.push_back(groups[g].first - 1);
            }
            std::sort(next_rows.begin(), next_rows.end());
            total += ways * count01_impl(std::move(next_rows), cols, memo);
            return;
        }
        int cap = std::min(groups[gi].second, left);
        for (int k = 0; k <= cap; ++k) {
            take[gi] = k;
            choose(gi + 1, left - k, ways * binom(groups[gi].second, k));
        }
        take[gi] = 0;
    };
    choose(0, col, 1);

    memo.emplace(std::move(key), total);
    return total;
}

std::map<MatKey, Int>& matrix_memo() {
    static std::map<MatKey, Int> memo;
    return memo;
}
std::mutex& matrix_memo_mutex() {
    static std::mutex mu;
    return mu;
}

}  // namespace

Int count_01_matrices(const IntegerPartition& rows, const IntegerPartition& cols) {
    std::vector<int> r = rows.parts(), c = cols.parts();
    std::sort(r.begin(), r.end());
    std::sort(c.begin(), c.end());
    std::lock_guard<std::mutex> lock(matrix_memo_mutex());
    return count01_impl(std::move(r), std::move(c), matrix_memo());
}

SymmetricFunction e_to_m(const SymmetricFunction& f) {
    if (f.basis() != Basis::E) throw std::invalid_argument("e_to_m expects an E-basis function");
    SymmetricFunction out(Basis::M, f.degree());
    auto mus = partitions_of(f.degree());
    for (const auto& [lambda, c] : f.terms())
        for (const auto& mu : mus) {
            Int n = count_01_matrices(lambda, mu);
            if (n != 0) out.add_term(mu, c * n);
        }
    return out;
}

SymmetricFunction m_to_e(const SymmetricFunction& f) {
    if (f.basis() != Basis::M) throw std::invalid_argument("m_to_e expects an M-basis function");
    int d = f.degree();
    auto all = partitions_of(d);

    // Unknowns ordered so transposes descend in a linear extension of
    // dominance (lexicographic works); substitution then never revisits a
    // solved pivot. Solvability is asserted, not assumed.
    std::vector<IntegerPartition> order = all;
    std::sort(order.begin(), order.end(), [](const IntegerPartition& a, const IntegerPartition& b) {
        return b.transpose() < a.transpose();
    });

    std::map<IntegerPartition, Rat> residual;
    for (const auto& [key, c] : f.terms()) residual[key] = Rat(c);

    SymmetricFunction out(Basis::E, d);
    for (const auto& lambda : order) {
        IntegerPartition pivot = lambda.transpose();
        Rat r = 0;
        if (auto it = residual.find(pivot); it != residual.end()) r = it->second;
        if (r == 0) continue;
        Int diag = count_01_matrices(lambda, pivot);
        if (diag == 0)
            throw std::runtime_error("m_to_e: transition matrix has zero pivot at e_" +
                                     lambda.to_string());
        Rat x = r / Rat(diag);
        for (const auto& mu : all) {
            Int n = count_01_matrices(lambda, mu);
            if (n != 0) residual[mu] -= x * Rat(n);
        }
        if (boost::multiprecision::denominator(x) != 1)
            throw std::runtime_error("m_to_e: non-integer coefficient on e_" + lambda.to_string());
        out.add_term(lambda, Int(boost::multiprecision::numerator(x)));
    }
    for (const auto& [mu, r] : residual)
        if (r != 0)
            throw std::runtime_error("m_to_e: system not solvable, residual at m_" +
                                     mu.to_string());
    return out;
}

Int sigma(const SymmetricFunction& f, const SigmaQuery& q) {
    if (f.basis() != Basis::E) throw std::invalid_argument("sigma expects an E-basis function");
    int l = q.prefix.length();
    if (q.next.has_value()) {
        if (*q.next < 0) throw std::invalid_argument("sigma: next part must be non-negative");
        if (*q.next == 0 && q.prefix.sum() != f.degree())
            throw std::invalid_argument(
                "sigma: next = 0 requires the prefix to exhaust the degree");
    }
    Int total = 0;
    for (const auto& [lambda, c] : f.terms()) {
        IntegerPartition t = lambda.transpose();
        if (t.length() < l) continue;
        bool ok = true;
        for (int i = 0; i < l && ok; ++i) ok = (t.parts()[i] == q.prefix.parts[i]);
        if (!ok) continue;
        if (q.next.has_value() && t.part(l) != *q.next) continue;
        total += c;
    }
    return total;
}

Int sigma(const SymmetricFunction& f, const IntegerSequence& prefix) {
    return sigma(f, SigmaQuery{prefix, std::nullopt});
}

Int sigma(const SymmetricFunction& f, const IntegerSequence& prefix, int next) {
    return sigma(f, SigmaQuery{prefix, next});
}

namespace {

const SymmetricFunction& m_in_e_cached(const IntegerPartition& mu) {
    static std::mutex lock;
    static std::map<IntegerPartition, SymmetricFunction> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(mu);
    if (it == cache.end()) it = cache.emplace(mu, m_to_e(m_basis_elem(mu))).first;
    return it->second;
}

IntegerPartition prepend(int k, const IntegerPartition& mu) {
    std::vector<int> parts;
    parts.reserve(mu.length() + 1);
    parts.push_back(k);
    parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
    return IntegerPartition(std::move(parts));
}

}  // namespace

LemmaSweepReport verify_m_e_shift_lemmas(int d_max) {
    if (d_max < 1) throw std::invalid_argument("d_max must be positive");
    LemmaSweepReport report;
    auto fail = [&](const std::string& what) {
        if (report.pass) {
            report.pass = false;
            report.first_counterexample = what;
        }
    };

    for (const auto& mu : partitions_up_to(d_max)) {
        const SymmetricFunction& mu_e = m_in_e_cached(mu);
        int mu1 = mu.empty() ? 1 : mu.parts()[0];
        for (int k = mu1; k <= d_max; ++k) {
            IntegerPartition kmu = prepend(k, mu);
            const SymmetricFunction& kmu_e = m_in_e_cached(kmu);

            // [e_lambda] m_mu == [e_{lambda+1^k}] m_{(k,mu)}
            for (const auto& lambda : partitions_of(static_cast<int>(mu.sum()))) {
                ++report.checks;
                Int lhs = mu_e.coeff(lambda);
                Int rhs = kmu_e.coeff(add_ones(lambda, k));
                if (lhs != rhs)
                    fail("shift lemma: mu=" + mu.to_string() + " lambda=" + lambda.to_string() +
                         " k=" + std::to_string(k));
            }

            // sigma_{(k,nu)}(m_{(k,mu)}) == sigma_nu(m_mu)
            for (int s = 0; s <= static_cast<int>(mu.sum()); ++s)
                for (const auto& nu : partitions_of(s)) {
                    if (!nu.empty() && nu.parts()[0] > k) continue;
                    ++report.checks;
                    Int rhs = sigma(mu_e, nu.as_sequence());
                    Int lhs = sigma(kmu_e, prepend(k, nu).as_sequence());
                    if (lhs != rhs)
                        fail("sigma shift lemma: mu=" + mu.to_string() + " nu=" + nu.to_string() +
                             " k=" + std::to_string(k));
                }
        }
    }
    return report;
}

std::string to_json_string(const SymmetricFunction& f) {
    std::ostringstream os;
    os << "{\"basis\":\"" << basis_name(f.basis()) << "\",\"degree\":" << f.degree()
       << ",\"terms\":[";
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        if (!first) os << ',';
        first = false;
        os << "{\"partition\":\"" << it->first.to_string() << "\",\"coeff\":\"" << it->second
           << "\"}";
    }
    os << "]}";
    return os.str();
}

}  // namespace csf
