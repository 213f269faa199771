// bicover: generate, cover, verify, and exhaustively cross-check bicoloring
// covers of k-uniform hypergraphs.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource-cap refusal.  Failures print one machine-parsable line on
// stderr: `error: <class>: <reason>`.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "bicover/battery.hpp"
#include "bicover/report_json.hpp"

using namespace bicover;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InvalidInput("cannot open " + out_path + " for writing");
        out << text;
    }
}

std::vector<Edge> read_edge_list(const std::string& path, int k) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::vector<Edge> edges;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag != "e") throw InvalidInput(path + ": expected `e v1 .. vk` lines");
        Edge e;
        int v;
        while (ls >> v) e.push_back(v - 1);
        if (static_cast<int>(e.size()) != k)
            throw InvalidInput(path + ": edge with " + std::to_string(e.size()) +
                               " vertices, expected " + std::to_string(k));
        edges.push_back(std::move(e));
    }
    return edges;
}

std::vector<int> read_vertex_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::vector<int> vs;
    int v;
    while (in >> v) vs.push_back(v - 1);
    return vs;
}

ordered_json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bicoloring covers for k-uniform hypergraphs"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate an instance in the bhg format");
    gen->require_subcommand(1);
    std::string gen_out;
    int gp_n = 9, gp_k = 3, gp_p = 3, gp_q = 4, gp_t = 1;
    double gp_prob = 0.5;
    std::uint64_t gp_seed = 1;
    bool gp_json = false;
    auto add_out = [&](CLI::App* sc) { sc->add_option("-o,--output", gen_out, "output file (default stdout)"); };

    auto* g_complete = gen->add_subcommand("complete", "complete k-uniform hypergraph");
    g_complete->add_option("--n", gp_n)->required();
    g_complete->add_option("--k", gp_k)->required();
    add_out(g_complete);

    auto* g_cycle = gen->add_subcommand("cycle", "odd cycle (k = 2)");
    g_cycle->add_option("--n", gp_n)->required();
    add_out(g_cycle);

    auto* g_g1 = gen->add_subcommand("g1", "the 12-vertex separation example");
    add_out(g_g1);

    auto* g_cf = gen->add_subcommand("coverfriendly", "row/column family with alpha >> gamma");
    g_cf->add_option("--p", gp_p)->required();
    g_cf->add_option("--q", gp_q)->required();
    add_out(g_cf);

    auto* g_rand = gen->add_subcommand("random", "each k-subset kept with probability prob");
    g_rand->add_option("--n", gp_n)->required();
    g_rand->add_option("--k", gp_k)->required();
    g_rand->add_option("--prob", gp_prob)->required();
    g_rand->add_option("--seed", gp_seed);
    add_out(g_rand);

    auto* g_gap = gen->add_subcommand("cliquegap", "random instance with omega = k after clique deletion");
    g_gap->add_option("--n", gp_n)->required();
    g_gap->add_option("--k", gp_k)->required();
    g_gap->add_option("--t", gp_t);
    g_gap->add_option("--seed", gp_seed);
    g_gap->add_flag("--json", gp_json, "print the generation report as JSON");
    add_out(g_gap);

    // ---- oracle ----------------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "exact chi_c, chi, alpha, gamma, omega");
    std::string or_file, or_out;
    bool or_json = false;
    int or_cap = 14, or_xcap = 3;
    std::uint64_t or_budget = std::uint64_t{1} << 28;
    oracle->add_option("file", or_file, "bhg instance")->required();
    oracle->add_option("--cap", or_cap, "vertex cap for exhaustive search");
    oracle->add_option("--xcap", or_xcap, "gamma optimal-cover size cap");
    oracle->add_option("--budget", or_budget, "gamma tuple budget");
    oracle->add_flag("--json", or_json);
    oracle->add_option("-o,--output", or_out);

    // ---- cover ----------------------------------------------------------------
    auto* cover = app.add_subcommand("cover", "deterministic constructions: mbc, hbc, kn");
    std::string cv_file, cv_algo, cv_matching, cv_hitting, cv_out;
    bool cv_json = false;
    cover->add_option("file", cv_file)->required();
    cover->add_option("--algo", cv_algo, "mbc | hbc | kn")->required();
    cover->add_option("--matching-file", cv_matching, "maximal matching (e-lines, 1-based)");
    cover->add_option("--hitting-file", cv_hitting, "hitting set (1-based vertex ids)");
    cover->add_flag("--json", cv_json);
    cover->add_option("-o,--output", cv_out);

    // ---- rcover ----------------------------------------------------------------
    auto* rcover = app.add_subcommand("rcover", "randomized covers: sparse or mtc");
    std::string rc_file, rc_algo = "sparse", rc_out;
    int rc_x = 1, rc_trials = 0;
    std::uint64_t rc_seed = 1;
    bool rc_json = false, rc_csv = false, rc_override = false;
    rcover->add_option("file", rc_file)->required();
    rcover->add_option("--x", rc_x, "cover size")->required();
    rcover->add_option("--algo", rc_algo, "sparse | mtc");
    rcover->add_option("--seed", rc_seed);
    rcover->add_option("--trials", rc_trials, "Monte-Carlo mode: seeds seed..seed+T-1, CSV out");
    rcover->add_flag("--json", rc_json);
    rcover->add_flag("--csv", rc_csv);
    rcover->add_flag("--override", rc_override, "skip the theorem precondition check");
    rcover->add_option("-o,--output", rc_out);

    // ---- approx ----------------------------------------------------------------
    auto* approx = app.add_subcommand("approx", "coloring-sweep approximation");
    std::string ap_file, ap_out;
    bool ap_json = false;
    approx->add_option("file", ap_file)->required();
    approx->add_flag("--json", ap_json);
    approx->add_option("-o,--output", ap_out);

    // ---- verify ----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check a cover JSON against an instance");
    std::string vf_graph, vf_cover, vf_out;
    bool vf_json = false;
    verify->add_option("graph", vf_graph)->required();
    verify->add_option("cover", vf_cover)->required();
    verify->add_flag("--json", vf_json);
    verify->add_option("-o,--output", vf_out);

    // ---- battery ----------------------------------------------------------------
    auto* battery_cmd = app.add_subcommand("battery", "replay the acceptance criteria");
    battery::Options bt_opt;
    std::string bt_seed_file;
    battery_cmd->add_flag("--quick", bt_opt.quick, "reduced trial counts");
    battery_cmd->add_option("--seed", bt_opt.seed);
    battery_cmd->add_option("--seed-file", bt_seed_file, "file holding the master seed");
    battery_cmd->add_option("--out", bt_opt.out_dir, "artifact output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "error: usage: " << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) {
            std::ostringstream out;
            if (g_complete->parsed()) {
                write_bhg(out, gen_complete(gp_n, gp_k));
            } else if (g_cycle->parsed()) {
                write_bhg(out, gen_odd_cycle(gp_n));
            } else if (g_g1->parsed()) {
                write_bhg(out, gen_g1());
            } else if (g_cf->parsed()) {
                write_bhg(out, gen_cover_friendly(CoverFriendlyParams{gp_p, gp_q}));
            } else if (g_rand->parsed()) {
                write_bhg(out, gen_random_kuniform(gp_n, gp_k, gp_prob, gp_seed));
            } else if (g_gap->parsed()) {
                if (gp_json && gen_out.empty())
                    throw InvalidInput("gen cliquegap --json needs -o for the instance file");
                auto [g, rep] = gen_clique_gap(gp_k, gp_t, gp_n, gp_seed);
                write_bhg(out, g);
                if (gp_json) std::cout << clique_gap_to_json(rep).dump(2) << "\n";
            }
            emit(out.str(), gen_out);
            return 0;
        }

        if (oracle->parsed()) {
            auto pr = read_bhg_file(or_file);
            if (pr.duplicates_removed > 0)
                std::cerr << "warning: " << pr.duplicates_removed
                          << " duplicate edge(s) canonicalized\n";
            OracleCaps caps;
            caps.n_cap = or_cap;
            caps.x_cap = or_xcap;
            caps.gamma_tuple_budget = or_budget;
            auto rep = oracle_report(pr.graph, caps);
            if (or_json || !or_out.empty()) {
                emit(oracle_report_to_json(rep).dump(2) + "\n", or_out);
            } else {
                std::cout << "n=" << rep.n << " k=" << rep.k << " m=" << rep.m
                          << " chi_c=" << rep.chi_c << " chi=" << rep.chi
                          << " alpha=" << rep.alpha << " gamma="
                          << (rep.gamma ? std::to_string(*rep.gamma) : "refused")
                          << " omega=" << rep.omega
                          << " checks=" << (rep.checks_passed() ? "ok" : "FAILED") << "\n";
            }
            if (!rep.checks_passed()) {
                std::cerr << "error: verification: oracle consistency checks failed\n";
                return 1;
            }
            return 0;
        }

        if (cover->parsed()) {
            auto pr = read_bhg_file(cv_file);
            const auto& g = pr.graph;
            ConstructionTrace trace;
            if (cv_algo == "kn") {
                trace.algorithm = "kn";
                trace.input_size = g.n();
                trace.cover = kn_cover(g.n(), g.k());
                trace.bound = trace.cover.size();
            } else if (cv_algo == "mbc") {
                auto m = cv_matching.empty() ? greedy_maximal_matching(g)
                                             : read_edge_list(cv_matching, g.k());
                trace = mbc(g, m);
            } else if (cv_algo == "hbc") {
                auto h = cv_hitting.empty() ? greedy_hitting_set(g)
                                            : read_vertex_list(cv_hitting);
                trace = hbc(g, h);
            } else {
                throw InvalidInput("unknown --algo " + cv_algo + " (expected mbc|hbc|kn)");
            }
            const bool valid = verify_cover(g, trace.cover).valid || g.m() == 0;
            if (cv_json || !cv_out.empty())
                emit(trace_to_json(g.n(), trace).dump(2) + "\n", cv_out);
            else
                std::cout << trace.algorithm << ": " << trace.cover.size()
                          << " bicolorings (bound " << trace.bound << "), valid="
                          << (valid ? "yes" : "no") << "\n";
            if (!valid) {
                std::cerr << "error: verification: emitted cover does not verify\n";
                return 1;
            }
            return 0;
        }

        if (rcover->parsed()) {
            auto pr = read_bhg_file(rc_file);
            const auto& g = pr.graph;
            if (rc_algo != "sparse" && rc_algo != "mtc")
                throw InvalidInput("unknown --algo " + rc_algo + " (expected sparse|mtc)");
            if (rc_trials > 0) {
                std::ostringstream csv;
                csv << "seed,attempts_or_T,bits,valid\n";
                bool all_valid = true;
                for (int t = 0; t < rc_trials; ++t) {
                    const std::uint64_t s = rc_seed + static_cast<std::uint64_t>(t);
                    RandomRun run = rc_algo == "sparse"
                                        ? sparse_random_cover(g, rc_x, s, rc_override)
                                        : mtc(g, rc_x, s, rc_override);
                    csv << s << ','
                        << (rc_algo == "sparse" ? static_cast<std::int64_t>(run.attempts)
                                                : run.resample_count)
                        << ',' << run.bits_used << ',' << (run.valid ? 1 : 0) << '\n';
                    all_valid = all_valid && run.valid;
                }
                emit(csv.str(), rc_out);
                if (!all_valid) {
                    std::cerr << "error: verification: some trials did not produce a valid cover\n";
                    return 1;
                }
                return 0;
            }
            RandomRun run = rc_algo == "sparse" ? sparse_random_cover(g, rc_x, rc_seed, rc_override)
                                                : mtc(g, rc_x, rc_seed, rc_override);
            if (rc_json || !rc_out.empty())
                emit(random_run_to_json(g.n(), run, rc_algo).dump(2) + "\n", rc_out);
            else
                std::cout << rc_algo << ": valid=" << (run.valid ? "yes" : "no")
                          << " attempts=" << run.attempts << " T=" << run.resample_count
                          << " bits=" << run.bits_used << "\n";
            if (!run.valid) {
                std::cerr << "error: verification: run did not produce a valid cover\n";
                return 1;
            }
            return 0;
        }

        if (approx->parsed()) {
            auto pr = read_bhg_file(ap_file);
            auto rep = cover_via_coloring_sweep(pr.graph);
            const bool valid = verify_cover(pr.graph, rep.cover).valid;
            if (ap_json || !ap_out.empty())
                emit(sweep_to_json(pr.graph.n(), rep).dump(2) + "\n", ap_out);
            else
                std::cout << "sweep: " << rep.cover.size() << " bicolorings via "
                          << rep.chosen_heuristic << " (colors " << rep.colors_used
                          << "), valid=" << (valid ? "yes" : "no") << "\n";
            if (!valid) {
                std::cerr << "error: verification: sweep cover does not verify\n";
                return 1;
            }
            return 0;
        }

        if (verify->parsed()) {
            auto pr = read_bhg_file(vf_graph);
            int n = 0;
            auto c = cover_from_json(load_json(vf_cover), &n);
            if (n != pr.graph.n())
                throw DimensionError("cover is for n=" + std::to_string(n) +
                                     " but instance has n=" + std::to_string(pr.graph.n()));
            auto cert = verify_cover(pr.graph, c);
            if (vf_json || !vf_out.empty())
                emit(certificate_to_json(cert).dump() + "\n", vf_out);
            else
                std::cout << (cert.valid ? "valid" : "invalid") << "\n";
            if (!cert.valid) {
                std::cerr << "error: verification: cover leaves "
                          << std::count(cert.witness.begin(), cert.witness.end(), -1)
                          << " edge(s) uncovered\n";
                return 1;
            }
            return 0;
        }

        if (battery_cmd->parsed()) {
            if (!bt_seed_file.empty()) {
                std::ifstream in(bt_seed_file);
                if (!(in >> bt_opt.seed))
                    throw InvalidInput("seed file " + bt_seed_file + " must hold an integer");
            }
            auto rows = battery::run(bt_opt);
            battery::print_rows(rows, std::cout);
            int fails = 0;
            for (const auto& r : rows)
                if (!r.pass) ++fails;
            if (fails > 0) {
                std::cerr << "error: verification: " << fails
                          << " acceptance criteria failed\n";
                return 1;
            }
            return 0;
        }
    } catch (const CapExceeded& e) {
        std::cerr << "error: cap-exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: invalid-input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
