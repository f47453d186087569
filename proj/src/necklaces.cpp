#include "csf/necklaces.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

namespace csf {

namespace {

long long ll_binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Number of arc components after removing the chosen positions from the
// cycle: one per surviving position whose cyclic successor was removed.
int component_count(int a, std::uint32_t mask) {
    if (mask == 0) return 1;  // intact cycle
    int comps = 0;
    for (int p = 0; p < a; ++p) {
        if (mask >> p & 1) continue;
        if (mask >> ((p + 1) % a) & 1) ++comps;
    }
    return comps;
}

// table[mu][j] for one cycle length, built by a single 2^a sweep.
const std::vector<std::vector<long long>>& necklace_table(int a) {
    if (a < 1 || a > 24) throw std::invalid_argument("cycle length out of supported range");
    static std::mutex lock;
    static std::map<int, std::vector<std::vector<long long>>> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;

    std::vector<std::vector<long long>> table(a + 1, std::vector<long long>(a + 2, 0));
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << a); ++mask)
        table[std::popcount(mask)][component_count(a, mask)] += 1;
    return cache.emplace(a, std::move(table)).first->second;
}

}  // namespace

long long count_necklace(int a, int mu, int j) {
    if (a < 1) throw std::invalid_argument("cycle length must be positive");
    if (mu < 0 || j < 0) return 0;
    if (mu > a || j > a + 1) return 0;
    return necklace_table(a)[mu][j];
}

std::vector<std::vector<int>> enumerate_necklace(int a, int mu, int j) {
    if (a < 1 || a > 24) throw std::invalid_argument("cycle length out of supported range");
    std::vector<std::vector<int>> out;
    if (mu < 0 || mu > a || j < 0) return out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << a); ++mask) {
        if (std::popcount(mask) != mu) continue;
        if (component_count(a, mask) != j) continue;
        std::vector<int> w;
        for (int p = 0; p < a; ++p)
            if (mask >> p & 1) w.push_back(p + 1);
        out.push_back(std::move(w));
    }
    return out;
}

long long signed_necklace_count(int a, int mu, int j) {
    long long c = count_necklace(a, mu, j);
    return ((a + mu) % 2 == 0) ? c : -c;
}

NecklaceReport verify_necklace_recurrence(int a_max) {
    if (a_max < 3) throw std::invalid_argument("a_max must be at least 3");
    NecklaceReport report;
    for (int a = 3; a <= a_max; ++a)
        for (int mu = 2; mu <= a; ++mu)
            for (int j = 1; j <= a - mu + 1; ++j) {
                long long rhs = count_necklace(a - 1, mu - 1, j);
                for (int i = mu + j - 2; i <= a - 2; ++i)
                    rhs += count_necklace(i, mu - 1, j - 1);
                ++report.checks;
                if (count_necklace(a, mu, j) != rhs && report.pass) {
                    report.pass = false;
                    report.first_counterexample = "a=" + std::to_string(a) +
                                                  " mu=" + std::to_string(mu) +
                                                  " j=" + std::to_string(j);
                }
            }
    return report;
}

NecklaceReport verify_sigma_pa_identity(int a_max) {
    if (a_max < 1) throw std::invalid_argument("a_max must be at least 1");
    NecklaceReport report;
    for (int a = 1; a <= a_max; ++a) {
        SymmetricFunction pa_e = p_to_e(p_basis_elem(IntegerPartition({a})));
        for (int mu = 1; mu <= a; ++mu)
            for (int j = (mu == a ? 0 : 1); j <= a - mu + 1; ++j) {
                Int lhs = sigma(pa_e, IntegerSequence({mu}), j);
                Int rhs = signed_necklace_count(a, mu, j);
                ++report.checks;
                if (lhs != rhs && report.pass) {
                    report.pass = false;
                    report.first_counterexample = "a=" + std::to_string(a) +
                                                  " mu=" + std::to_string(mu) +
                                                  " j=" + std::to_string(j);
                }
            }
    }
    return report;
}

OneEdgeLemmaSides one_edge_lemma_sides(int a, int b, int mu, int j) {
    if (a < 1 || b < a) throw std::invalid_argument("requires 1 <= a <= b");
    bool mu_ok = (mu >= 1) && (mu <= a || (mu >= b && mu <= a + b));
    if (!mu_ok) throw std::invalid_argument("mu must satisfy mu <= a or b <= mu <= a+b");
    if (j < 0 || j > a + b - mu) throw std::invalid_argument("j out of range");
    if (j == 0 && mu != a + b) throw std::invalid_argument("j = 0 requires mu = a+b");

    OneEdgeLemmaSides sides;
    sides.lhs = -count_necklace(a + b, mu, j);
    for (int k = 1; k <= mu - 1; ++k)
        for (int l = 0; l <= j; ++l)
            sides.lhs += count_necklace(a, k, l) * count_necklace(b, mu - k, j - l);

    long long sign_j = (j % 2 == 0) ? 1 : -1;
    if (mu == a && a == b) {
        sides.rhs = sign_j * 2 * ll_binom(a, j);
    } else if (a < b && (mu == a || mu == b)) {
        sides.rhs = sign_j * ll_binom(a, j) - count_necklace(b, mu, j);
    } else {
        sides.rhs = -count_necklace(a, mu, j) - count_necklace(b, mu, j);
    }
    return sides;
}

NecklaceReport verify_one_edge_lemma(int a, int b, int mu, int j) {
    NecklaceReport report;
    report.checks = 1;
    OneEdgeLemmaSides sides = one_edge_lemma_sides(a, b, mu, j);
    if (sides.lhs != sides.rhs) {
        report.pass = false;
        report.first_counterexample = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                      " mu=" + std::to_string(mu) + " j=" + std::to_string(j);
    }
    return report;
}

}  // namespace csf
