#include "csf/verify.hpp"

#include <chrono>
#include <sstream>

#include "csf/necklaces.hpp"
#include "csf/orientations.hpp"

namespace csf {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

VerificationReport make_unmet(std::string statement, const SetWeightedGraph& g, std::string mu,
                              int j, std::string why) {
    VerificationReport r;
    r.statement = std::move(statement);
    r.graph = g.to_json_string();
    r.mu = std::move(mu);
    r.j = j;
    r.status = VerifyStatus::PreconditionUnmet;
    r.detail = std::move(why);
    return r;
}

VerificationReport compare(std::string statement, const SetWeightedGraph& g, std::string mu, int j,
                           const Int& lhs, const Int& rhs, Clock::time_point start,
                           std::string detail_on_fail = "") {
    VerificationReport r;
    r.statement = std::move(statement);
    r.graph = g.to_json_string();
    r.mu = std::move(mu);
    r.j = j;
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    r.status = (lhs == rhs) ? VerifyStatus::Pass : VerifyStatus::Fail;
    if (r.status == VerifyStatus::Fail) r.detail = std::move(detail_on_fail);
    r.millis = elapsed_ms(start);
    return r;
}

}  // namespace

std::string status_name(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Pass: return "pass";
        case VerifyStatus::Fail: return "fail";
        case VerifyStatus::PreconditionUnmet: return "precondition-unmet";
    }
    return "?";
}

std::string to_json_line(const VerificationReport& r) {
    std::ostringstream os;
    os << "{\"statement\":\"" << json_escape(r.statement) << "\",\"graph\":" << r.graph
       << ",\"mu\":\"" << json_escape(r.mu) << "\",\"j\":" << r.j << ",\"lhs\":\""
       << json_escape(r.lhs) << "\",\"rhs\":\"" << json_escape(r.rhs) << "\",\"status\":\""
       << status_name(r.status) << "\",\"millis\":" << r.millis;
    if (!r.detail.empty()) os << ",\"detail\":\"" << json_escape(r.detail) << "\"";
    os << "}";
    return os.str();
}

VerificationReport verify_stanley_sinks(const SetWeightedGraph& g) {
    auto start = Clock::now();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.weight(v) != 1)
            return make_unmet("stanley", g, "", -1, "requires all vertex weights 1");

    SymmetricFunction x = csf_e(g);
    std::map<int, long long> sink_counts = count_by_sink_count(g);

    std::ostringstream lhs, rhs, detail;
    bool ok = true;
    for (int k = 1; k <= g.vertex_count(); ++k) {
        Int coeff_sum = sigma(x, IntegerSequence({k}));
        long long orientations = sink_counts.count(k) ? sink_counts[k] : 0;
        if (coeff_sum != orientations) ok = false;
        if (k > 1) {
            lhs << ' ';
            rhs << ' ';
        }
        lhs << "k=" << k << ":" << coeff_sum;
        rhs << "k=" << k << ":" << orientations;
    }
    VerificationReport r;
    r.statement = "stanley";
    r.graph = g.to_json_string();
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    r.status = ok ? VerifyStatus::Pass : VerifyStatus::Fail;
    r.millis = elapsed_ms(start);
    return r;
}

VerificationReport verify_main_theorem(const SetWeightedGraph& g, const IntegerPartition& mu,
                                       int j) {
    auto start = Clock::now();
    long long d = g.total_weight();
    if (j < 0 || mu.sum() + j > d || (j == 0 && mu.sum() != d))
        return make_unmet("main", g, mu.to_string(), j, "(mu, j) out of range");
    if (!is_maximal(g, mu)) return make_unmet("main", g, mu.to_string(), j, "mu is not maximal");

    Int lhs = sigma(csf_e(g), SigmaQuery{mu.as_sequence(), j});
    Int rhs = theorem_rhs(g, mu, j);
    return compare("main", g, mu.to_string(), j, lhs, rhs, start);
}

VerificationReport verify_one_level(const SetWeightedGraph& g, int j) {
    auto start = Clock::now();
    if (j < 1 || j > g.total_weight())
        return make_unmet("one-level", g, "", j, "j out of range");
    Int lhs = sigma(csf_e(g), IntegerSequence({j}));
    Int rhs = one_level_rhs(g, j);
    return compare("one-level", g, "", j, lhs, rhs, start);
}

namespace {

VerificationReport verify_generalized(const std::string& statement, const SetWeightedGraph& g,
                                      int mu, int j) {
    auto start = Clock::now();
    long long d = g.total_weight();
    if (mu < 1 || mu > d || j < 0 || j > d - mu || (j == 0 && mu != d))
        return make_unmet(statement, g, std::to_string(mu), j, "(mu, j) out of range");
    if (!is_s_allowable(g, mu))
        return make_unmet(statement, g, std::to_string(mu), j, "mu is not s-allowable");

    Int lhs = sigma(csf_e(g), IntegerSequence({mu}), j);
    Int rhs = conjecture_rhs(g, mu, j);

    std::string detail;
    if (lhs != rhs) {
        // Potential counterexample: attach the per-orientation contributions.
        ConjectureBreakdown bd = conjecture_breakdown(g, mu, j);
        std::ostringstream os;
        os << "potential counterexample;";
        for (const auto& entry : bd.per_orientation) {
            if (entry.contributions.empty()) continue;
            os << " [" << entry.orientation << "]";
            for (const auto& c : entry.contributions)
                os << " {" << c.label << ": " << c.value << "}";
        }
        detail = os.str();
    }
    return compare(statement, g, std::to_string(mu), j, lhs, rhs, start, detail);
}

}  // namespace

VerificationReport verify_no_edge(const SetWeightedGraph& g, int mu, int j) {
    if (g.edge_count() != 0)
        return make_unmet("no-edge", g, std::to_string(mu), j, "graph must be edgeless");
    return verify_generalized("no-edge", g, mu, j);
}

VerificationReport verify_one_edge_graph(const SetWeightedGraph& g, int mu, int j) {
    if (g.vertex_count() != 2 || g.edge_count() != 1 || g.has_loop())
        return make_unmet("one-edge", g, std::to_string(mu), j,
                          "graph must be two vertices joined by one edge");
    int a = std::min(g.weight(0), g.weight(1));
    int b = std::max(g.weight(0), g.weight(1));
    if (!(mu <= a || (mu >= b && mu <= a + b)))
        return make_unmet("one-edge", g, std::to_string(mu), j,
                          "mu must satisfy mu <= a or b <= mu <= a+b");
    return verify_generalized("one-edge", g, mu, j);
}

VerificationReport verify_conjecture(const SetWeightedGraph& g, int mu, int j) {
    return verify_generalized("conjecture", g, mu, j);
}

SetWeightedGraph random_graph(std::mt19937_64& rng, const FuzzConfig& cfg) {
    SetWeightedGraph g;
    int n = 1 + static_cast<int>(rng() % std::max(1, cfg.max_vertices));
    if (cfg.statement == "one-edge") n = 2;
    int next_label = 1;
    for (int v = 0; v < n; ++v) {
        SetWeightedGraph::Vertex vertex;
        vertex.id = "v" + std::to_string(v + 1);
        int w = (cfg.statement == "stanley") ? 1
                                             : 1 + static_cast<int>(rng() % std::max(1, cfg.max_weight));
        for (int t = 0; t < w; ++t) vertex.omega.push_back(next_label++);
        g.vertices.push_back(std::move(vertex));
    }
    if (cfg.statement == "one-edge") {
        g.edges.emplace_back(0, 1);
        return g;
    }
    if (cfg.statement == "no-edge") return g;
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            if (static_cast<long long>(rng() % std::max(1LL, cfg.edge_prob_den)) <
                cfg.edge_prob_num)
                g.edges.emplace_back(i, k);
    // Occasional parallel copy to exercise multi-edge collapse.
    if (!g.edges.empty() && rng() % 8 == 0)
        g.edges.push_back(g.edges[rng() % g.edges.size()]);
    return g;
}

void fuzz(const FuzzConfig& cfg, const std::function<void(const VerificationReport&)>& sink) {
    std::mt19937_64 rng(cfg.seed);
    for (int trial = 0; trial < cfg.trials; ++trial) {
        SetWeightedGraph g = random_graph(rng, cfg);
        int d = static_cast<int>(g.total_weight());

        if (cfg.statement == "stanley") {
            sink(verify_stanley_sinks(g));
        } else if (cfg.statement == "one-level") {
            for (int j = 1; j <= d; ++j) sink(verify_one_level(g, j));
        } else if (cfg.statement == "main") {
            for (int r = 1; r <= d; ++r)
                for (const auto& mu : partitions_of(r)) {
                    int j_lo = (r == d) ? 0 : 1;
                    for (int j = j_lo; j <= d - r; ++j) sink(verify_main_theorem(g, mu, j));
                }
        } else if (cfg.statement == "no-edge" || cfg.statement == "one-edge" ||
                   cfg.statement == "conjecture") {
            auto run = [&](int mu, int j) {
                if (cfg.statement == "no-edge")
                    sink(verify_no_edge(g, mu, j));
                else if (cfg.statement == "one-edge")
                    sink(verify_one_edge_graph(g, mu, j));
                else
                    sink(verify_conjecture(g, mu, j));
            };
            for (int mu = 1; mu <= d; ++mu) {
                int j_lo = (mu == d) ? 0 : 1;
                for (int j = j_lo; j <= d - mu; ++j) run(mu, j);
            }
        } else {
            throw std::invalid_argument("unknown statement: " + cfg.statement);
        }
    }
}

}  // namespace csf
