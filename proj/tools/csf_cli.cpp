// csf_cli.cpp
//
// Command-line front end: exact chromatic symmetric functions of set-weighted
// graphs, e-coefficient sums, orientation and necklace enumeration, and the
// statement verifiers with a seeded fuzz mode.
//
// Exit codes: 0 success / all pass, 1 verification failure or counterexample,
// 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "csf/necklaces.hpp"
#include "csf/orientations.hpp"
#include "csf/swgraph.hpp"
#include "csf/verify.hpp"
#include "csf/weightmaps.hpp"

namespace {

csf::SetWeightedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw csf::GraphParseError("cannot open graph file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return csf::SetWeightedGraph::parse(buffer.str());
}

void parse_rational(const std::string& text, long long& num, long long& den) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            num = std::stoll(text);
            den = 1;
        } else {
            num = std::stoll(text.substr(0, slash));
            den = std::stoll(text.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--edge-prob", "expected an exact rational like 1/2");
    }
    if (den <= 0 || num < 0 || num > den)
        throw CLI::ValidationError("--edge-prob", "probability must lie in [0, 1]");
}

void print_report(const csf::VerificationReport& r, bool json) {
    if (json) {
        std::cout << csf::to_json_line(r) << "\n";
        return;
    }
    std::cout << "[" << csf::status_name(r.status) << "] " << r.statement;
    if (!r.mu.empty()) std::cout << " mu=" << r.mu;
    if (r.j >= 0) std::cout << " j=" << r.j;
    if (r.status != csf::VerifyStatus::PreconditionUnmet)
        std::cout << " lhs=" << r.lhs << " rhs=" << r.rhs;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
    std::cout << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact chromatic symmetric functions of set-weighted graphs"};
    app.require_subcommand(1);

    std::string graph_path, mu_text, basis = "e", statement, edge_prob = "1/2";
    int j = -1, necklace_a = 0, necklace_mu = -1, necklace_j = -1;
    bool json = false, enumerate = false;
    std::uint64_t seed = 1;
    int trials = 10, max_vertices = 4, max_weight = 3;

    auto* compute = app.add_subcommand("compute", "chromatic symmetric function of a graph");
    compute->add_option("--graph", graph_path, "graph JSON file")->required();
    compute->add_option("--basis", basis, "output basis: p, e or m")
        ->check(CLI::IsMember({"p", "e", "m"}));
    compute->add_flag("--json", json, "emit JSON");

    auto* sigma_cmd = app.add_subcommand("sigma", "e-coefficient sum sigma_{mu,j}");
    sigma_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
    sigma_cmd->add_option("--mu", mu_text, "partition string, e.g. 7 or 3,2")->required();
    sigma_cmd->add_option("--j", j, "pinned next transpose part");
    sigma_cmd->add_flag("--json", json, "emit JSON");

    auto* orient = app.add_subcommand("orientations", "acyclic orientations and sink levels");
    orient->add_option("--graph", graph_path, "graph JSON file")->required();
    orient->add_flag("--json", json, "emit JSON");

    auto* necklace = app.add_subcommand("necklace", "cyclic configuration counts");
    necklace->add_option("--a", necklace_a, "cycle length")->required();
    necklace->add_option("--mu", necklace_mu, "chosen subset size")->required();
    necklace->add_option("--j", necklace_j, "component count")->required();
    necklace->add_flag("--enumerate", enumerate, "list the subsets");
    necklace->add_flag("--json", json, "emit JSON");

    auto* verify = app.add_subcommand("verify", "check one statement on one graph");
    std::string verify_statement;
    verify->add_option("statement", verify_statement,
                       "stanley | one-level | main | no-edge | one-edge | conjecture")
        ->required()
        ->check(CLI::IsMember({"stanley", "one-level", "main", "no-edge", "one-edge",
                               "conjecture"}));
    verify->add_option("--graph", graph_path, "graph JSON file")->required();
    verify->add_option("--mu", mu_text, "partition string");
    verify->add_option("--j", j, "next transpose part");
    verify->add_flag("--json", json, "emit JSON report lines");

    auto* fuzz_cmd = app.add_subcommand("fuzz", "seeded random-graph sweeps");
    fuzz_cmd->add_option("--statement", statement,
                         "stanley | one-level | main | no-edge | one-edge | conjecture")
        ->required()
        ->check(CLI::IsMember({"stanley", "one-level", "main", "no-edge", "one-edge",
                               "conjecture"}));
    fuzz_cmd->add_option("--seed", seed, "rng seed");
    fuzz_cmd->add_option("--trials", trials, "number of graphs");
    fuzz_cmd->add_option("--max-vertices", max_vertices, "vertex count bound");
    fuzz_cmd->add_option("--max-weight", max_weight, "vertex weight bound");
    fuzz_cmd->add_option("--edge-prob", edge_prob, "edge probability as p/q");
    fuzz_cmd->add_flag("--json", json, "emit JSON report lines");

    auto* clawfree = app.add_subcommand("clawfree", "induced claw detection");
    clawfree->add_option("--graph", graph_path, "graph JSON file")->required();
    clawfree->add_flag("--json", json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version are fine; usage errors exit 2
    }

    if (compute->parsed()) {
        csf::SetWeightedGraph g = load_graph(graph_path);
        csf::SymmetricFunction f = csf::csf_p(g);
        if (basis == "e") f = csf::p_to_e(f);
        if (basis == "m") f = csf::e_to_m(csf::p_to_e(f));
        if (json) {
            std::cout << csf::to_json_string(f) << "\n";
        } else {
            std::cout << "X in " << basis << " basis, degree " << f.degree() << ":\n";
            for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
                std::cout << "  " << basis << "[" << it->first.to_string() << "] " << it->second
                          << "\n";
        }
        return 0;
    }

    if (sigma_cmd->parsed()) {
        csf::SetWeightedGraph g = load_graph(graph_path);
        csf::IntegerPartition mu = csf::IntegerPartition::parse(mu_text);
        csf::SigmaQuery q{mu.as_sequence(), std::nullopt};
        if (sigma_cmd->count("--j")) q.next = j;
        csf::Int value = csf::sigma(csf::csf_e(g), q);
        bool single_part = mu.length() == 1;
        bool s_allow = single_part ? csf::is_s_allowable(g, mu.parts()[0]) : false;
        bool maximal = csf::is_maximal(g, mu);
        if (json) {
            std::cout << "{\"mu\":\"" << mu.to_string() << "\",\"j\":" << (q.next ? *q.next : -1)
                      << ",\"sigma\":\"" << value << "\"";
            if (single_part) std::cout << ",\"s_allowable\":" << (s_allow ? "true" : "false");
            std::cout << ",\"maximal\":" << (maximal ? "true" : "false") << "}\n";
        } else {
            std::cout << "sigma = " << value << "\n";
            if (single_part)
                std::cout << "s-allowable: " << (s_allow ? "true" : "false") << "\n";
            std::cout << "maximal: " << (maximal ? "true" : "false") << "\n";
        }
        return 0;
    }

    if (orient->parsed()) {
        csf::SetWeightedGraph g = load_graph(graph_path);
        long long total = 0;
        std::map<int, long long> histogram;
        csf::for_each_acyclic(g, [&](const csf::Orientation& o) {
            csf::SinkDecomposition dec = csf::sink_decomposition(g, o);
            ++total;
            histogram[dec.count_at(1)] += 1;
            if (json) {
                std::cout << "{\"arcs\":\"" << o.to_string(g) << "\",\"type\":\""
                          << dec.type_seq.to_string() << "\",\"sink_counts\":\"";
                for (int i = 0; i < dec.level_count(); ++i)
                    std::cout << (i ? "," : "") << dec.counts[i];
                std::cout << "\"}\n";
            } else {
                std::cout << "arcs: " << (o.arcs.empty() ? "(none)" : o.to_string(g))
                          << " | levels:";
                for (const auto& level : dec.levels) {
                    std::cout << " [";
                    for (size_t i = 0; i < level.size(); ++i)
                        std::cout << (i ? "," : "") << g.vertices[level[i]].id;
                    std::cout << "]";
                }
                std::cout << " | type: " << dec.type_seq.to_string() << "\n";
            }
        });
        if (!json) {
            std::cout << "acyclic orientations: " << total << "\n";
            std::cout << "sink-count histogram:";
            for (const auto& [k, c] : histogram) std::cout << " " << k << ":" << c;
            std::cout << "\n";
        }
        return 0;
    }

    if (necklace->parsed()) {
        long long count = csf::count_necklace(necklace_a, necklace_mu, necklace_j);
        if (json) {
            std::cout << "{\"a\":" << necklace_a << ",\"mu\":" << necklace_mu
                      << ",\"j\":" << necklace_j << ",\"count\":" << count << "}\n";
        } else {
            std::cout << "count = " << count << "\n";
        }
        if (enumerate)
            for (const auto& w : csf::enumerate_necklace(necklace_a, necklace_mu, necklace_j)) {
                for (size_t i = 0; i < w.size(); ++i) std::cout << (i ? "," : "") << w[i];
                std::cout << "\n";
            }
        return 0;
    }

    if (verify->parsed()) {
        csf::SetWeightedGraph g = load_graph(graph_path);
        int d = static_cast<int>(g.total_weight());
        std::vector<csf::VerificationReport> reports;
        bool have_mu = verify->count("--mu") > 0;
        bool have_j = verify->count("--j") > 0;

        auto single_part_sweep = [&](const std::function<csf::VerificationReport(int, int)>& f) {
            if (have_mu) {
                csf::IntegerPartition mu_part = csf::IntegerPartition::parse(mu_text);
                if (mu_part.length() != 1)
                    throw std::invalid_argument("this statement takes a single-part --mu");
                int mu = mu_part.parts()[0];
                if (have_j) {
                    reports.push_back(f(mu, j));
                } else {
                    for (int jj = (mu == d ? 0 : 1); jj <= d - mu; ++jj)
                        reports.push_back(f(mu, jj));
                }
            } else {
                for (int mu = 1; mu <= d; ++mu)
                    for (int jj = (mu == d ? 0 : 1); jj <= d - mu; ++jj)
                        reports.push_back(f(mu, jj));
            }
        };

        if (verify_statement == "stanley") {
            reports.push_back(csf::verify_stanley_sinks(g));
        } else if (verify_statement == "one-level") {
            if (have_j) {
                reports.push_back(csf::verify_one_level(g, j));
            } else {
                for (int jj = 1; jj <= d; ++jj) reports.push_back(csf::verify_one_level(g, jj));
            }
        } else if (verify_statement == "main") {
            if (have_mu) {
                csf::IntegerPartition mu = csf::IntegerPartition::parse(mu_text);
                int r = static_cast<int>(mu.sum());
                if (have_j) {
                    reports.push_back(csf::verify_main_theorem(g, mu, j));
                } else {
                    for (int jj = (r == d ? 0 : 1); jj <= d - r; ++jj)
                        reports.push_back(csf::verify_main_theorem(g, mu, jj));
                }
            } else {
                for (int r = 1; r <= d; ++r)
                    for (const auto& mu : csf::partitions_of(r))
                        for (int jj = (r == d ? 0 : 1); jj <= d - r; ++jj)
                            reports.push_back(csf::verify_main_theorem(g, mu, jj));
            }
        } else if (verify_statement == "no-edge") {
            single_part_sweep([&](int m, int jj) { return csf::verify_no_edge(g, m, jj); });
        } else if (verify_statement == "one-edge") {
            single_part_sweep([&](int m, int jj) { return csf::verify_one_edge_graph(g, m, jj); });
        } else {
            single_part_sweep([&](int m, int jj) { return csf::verify_conjecture(g, m, jj); });
        }

        long long pass = 0, fail = 0, unmet = 0;
        for (const auto& r : reports) {
            print_report(r, json);
            if (r.status == csf::VerifyStatus::Pass) ++pass;
            if (r.status == csf::VerifyStatus::Fail) ++fail;
            if (r.status == csf::VerifyStatus::PreconditionUnmet) ++unmet;
        }
        if (!json)
            std::cout << "summary: pass=" << pass << " fail=" << fail << " unmet=" << unmet
                      << "\n";
        return fail > 0 ? 1 : 0;
    }

    if (fuzz_cmd->parsed()) {
        csf::FuzzConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.max_vertices = max_vertices;
        cfg.max_weight = max_weight;
        cfg.statement = statement;
        parse_rational(edge_prob, cfg.edge_prob_num, cfg.edge_prob_den);
        long long pass = 0, fail = 0, unmet = 0;
        csf::fuzz(cfg, [&](const csf::VerificationReport& r) {
            if (r.status == csf::VerifyStatus::Pass) ++pass;
            if (r.status == csf::VerifyStatus::Fail) ++fail;
            if (r.status == csf::VerifyStatus::PreconditionUnmet) ++unmet;
            if (json || r.failed()) print_report(r, json);
        });
        if (!json)
            std::cout << "summary: pass=" << pass << " fail=" << fail << " unmet=" << unmet
                      << "\n";
        return fail > 0 ? 1 : 0;
    }

    if (clawfree->parsed()) {
        csf::SetWeightedGraph g = load_graph(graph_path);
        bool cf = csf::is_claw_free(g);
        if (json)
            std::cout << "{\"claw_free\":" << (cf ? "true" : "false") << "}\n";
        else
            std::cout << "claw-free: " << (cf ? "true" : "false") << "\n";
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const csf::GraphParseError& e) {
        std::cerr << "graph error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
