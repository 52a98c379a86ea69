// gent: graph entropy toolkit command line
#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gent/errors.hpp"
#include "gent/serialize.hpp"
#include "gent/verify.hpp"

using namespace gent;

namespace {

struct Caps {
    int is_enum = kDefaultEnumCap;
    int power = kDefaultPowerCap;
    int coloring = kDefaultChromaticCap;
    int grundy = kDefaultGrundyCap;
    int min_entropy = kDefaultMinEntropyCap;
    int perfect_def = kDefaultPerfectDefCap;
    int perfect_hole = kDefaultPerfectHoleCap;
    int clique_partition = kDefaultCliquePartitionCap;
    int odd_set = kDefaultOddSetCap;
    int bipartite = kDefaultBipartiteCap;
    int permanent = kDefaultPermanentCap;

    static Caps from_env() {
        Caps c;
        if (const char* env = std::getenv("GENT_CAP_OVERRIDE")) {
            int v = std::atoi(env);
            if (v >= 1)
                c = Caps{v, v, v, v, v, v, v, v, v, v, v};
        }
        return c;
    }
};

struct CommonOpts {
    std::string graph_file;
    std::vector<std::string> gen;
    bool line_modifier = false;
    std::string dist_spec = "uniform";
    double tol = 1e-7;
    long budget = 100000;
    std::uint64_t seed = 1;
    std::string format = "json";
    bool timing = false;
};

void add_graph_options(CLI::App* cmd, CommonOpts& o, bool with_dist) {
    cmd->add_option("graph", o.graph_file, "DIMACS edge-format graph file");
    cmd->add_option("--gen", o.gen, "generator spec: <family> <params...>")->expected(-1);
    cmd->add_flag("--line-graph,--line-of", o.line_modifier,
                  "apply the line-graph construction first");
    if (with_dist)
        cmd->add_option("--dist", o.dist_spec, "distribution file (JSON array) or `uniform`");
    cmd->add_option("--tol", o.tol, "tolerance in bits");
    cmd->add_option("--budget", o.budget, "iteration budget");
    cmd->add_option("--seed", o.seed, "seed for randomized suites");
    cmd->add_option("--format", o.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--timing", o.timing, "include wall-clock timing in the output");
}

Graph load_graph(const CommonOpts& o, const Caps& caps) {
    std::optional<Graph> g;
    if (!o.gen.empty()) {
        std::vector<int> params;
        for (std::size_t i = 1; i < o.gen.size(); ++i) params.push_back(std::stoi(o.gen[i]));
        g = generate(o.gen[0], params);
    } else if (!o.graph_file.empty()) {
        std::ifstream in(o.graph_file);
        if (!in) throw InputError("cannot open graph file `" + o.graph_file + "`");
        std::stringstream buf;
        buf << in.rdbuf();
        g = parse_dimacs(buf.str());
    } else {
        throw InputError("no graph given: pass a DIMACS file or --gen <family> <params...>");
    }
    if (o.line_modifier) g = line_graph(*g).graph;
    (void)caps;
    return *g;
}

Distribution load_distribution(const std::string& spec, int n) {
    if (spec == "uniform") return Distribution::uniform(n);
    std::ifstream in(spec);
    if (!in) throw InputError("cannot open distribution file `" + spec + "`");
    Json j = Json::parse(in, nullptr, true);
    if (!j.is_array()) throw ParseError("distribution file must hold a JSON array of numbers");
    std::vector<double> p;
    for (const auto& x : j) p.push_back(x.get<double>());
    if (int(p.size()) != n)
        throw InputError("distribution length " + std::to_string(p.size()) +
                         " does not match graph order " + std::to_string(n));
    return Distribution(p);
}

struct Emitter {
    const CommonOpts& opts;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(const std::string& command, Json result, const std::string& text) const {
        if (opts.format == "text") {
            std::cout << text;
            return;
        }
        Json envelope{{"schema", 1}, {"command", command}, {"result", std::move(result)}};
        if (opts.timing) {
            auto dt = std::chrono::steady_clock::now() - start;
            envelope["timing_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
        }
        std::cout << envelope.dump(2) << "\n";
    }
};

SolverConfig solver_config(const CommonOpts& o, const Caps& caps) {
    SolverConfig cfg;
    cfg.tol_bits = o.tol;
    cfg.max_iterations = o.budget;
    cfg.is_cap = caps.is_enum;
    return cfg;
}

int run(int argc, char** argv) {
    CLI::App app{"graph entropy toolkit"};
    app.require_subcommand(1);
    Caps caps = Caps::from_env();

    CommonOpts gen_o;
    auto* cmd_generate = app.add_subcommand("generate", "emit a graph in DIMACS format");
    add_graph_options(cmd_generate, gen_o, false);

    CommonOpts ent_o;
    std::string method = "fw";
    auto* cmd_entropy = app.add_subcommand("entropy", "graph entropy H_k(G,P)");
    add_graph_options(cmd_entropy, ent_o, true);
    cmd_entropy->add_option("--method", method, "solver: fw, am, or both")
        ->check(CLI::IsMember({"fw", "am", "both"}));

    CommonOpts chrom_o;
    auto* cmd_chromatic =
        app.add_subcommand("chromatic-entropy", "minimum-entropy coloring H_chi(G,P)");
    add_graph_options(cmd_chromatic, chrom_o, true);

    CommonOpts frac_o;
    auto* cmd_fractional = app.add_subcommand("fractional", "fractional chromatic number");
    add_graph_options(cmd_fractional, frac_o, false);

    CommonOpts edge_o;
    auto* cmd_edge =
        app.add_subcommand("fractional-edge", "fractional edge-chromatic number");
    add_graph_options(cmd_edge, edge_o, false);

    CommonOpts maxent_o;
    auto* cmd_maxent =
        app.add_subcommand("max-entropy", "distribution maximizing H_k(G,P)");
    add_graph_options(cmd_maxent, maxent_o, false);

    CommonOpts sym_o;
    bool sym_numeric = false;
    auto* cmd_symmetry = app.add_subcommand("symmetry", "symmetry with respect to graph entropy");
    add_graph_options(cmd_symmetry, sym_o, false);
    cmd_symmetry->add_flag("--numeric", sym_numeric, "force the numeric-only criterion");

    CommonOpts count_o;
    std::string points_file;
    auto* cmd_counting = app.add_subcommand("counting", "Shearer and Bregman checkers");
    add_graph_options(cmd_counting, count_o, false);
    cmd_counting->add_option("--points", points_file, "3D integer points, one `x y z` per line");

    CommonOpts verify_o;
    std::string suite = "all";
    bool quick = false;
    int threads = 0;
    auto* cmd_verify = app.add_subcommand("verify", "run the acceptance checks");
    cmd_verify->add_option("--suite", suite, "paper, properties, or all");
    cmd_verify->add_option("--seed", verify_o.seed, "seed for the randomized checks");
    cmd_verify->add_flag("--quick", quick, "50-graph sample for the splitting sweep");
    cmd_verify->add_option("--threads", threads, "worker threads for the splitting sweep");
    cmd_verify->add_option("--format", verify_o.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    if (cmd_generate->parsed()) {
        Emitter em{gen_o};
        Graph g = load_graph(gen_o, caps);
        Json edges = Json::array();
        for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
        em.emit("generate",
                Json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges},
                     {"dimacs", to_dimacs(g)}},
                to_dimacs(g));
        return 0;
    }

    if (cmd_entropy->parsed()) {
        Emitter em{ent_o};
        Graph g = load_graph(ent_o, caps);
        Distribution p = load_distribution(ent_o.dist_spec, g.vertex_count());
        SolverConfig cfg = solver_config(ent_o, caps);
        Json result;
        std::ostringstream text;
        if (method == "fw" || method == "both") {
            auto r = entropy_fw(g, p, cfg);
            result["fw"] = to_json(r);
            text << "H_k = " << r.value_bits << " bits (fw, gap " << r.gap_bits << ")\n";
        }
        if (method == "am" || method == "both") {
            auto r = entropy_am(g, p, cfg);
            result["am"] = to_json(r);
            text << "H_k = " << r.value_bits << " bits (am, gap " << r.gap_bits << ")\n";
        }
        if (method == "both") {
            double diff = std::abs(result["fw"]["value_bits"].get<double>() -
                                   result["am"]["value_bits"].get<double>());
            result["abs_difference"] = diff;
            text << "difference " << diff << " bits\n";
        }
        em.emit("entropy", result, text.str());
        return 0;
    }

    if (cmd_chromatic->parsed()) {
        Emitter em{chrom_o};
        Graph g = load_graph(chrom_o, caps);
        Distribution p = load_distribution(chrom_o.dist_spec, g.vertex_count());
        auto r = min_entropy_coloring(g, p, caps.min_entropy);
        int colors = chi_H(g, p, caps.min_entropy);
        Json j = to_json(r.coloring, p);
        j["value_bits"] = r.entropy_bits;
        j["chi_H"] = colors;
        std::ostringstream text;
        text << "H_chi = " << r.entropy_bits << " bits using " << r.coloring.classes.size()
             << " classes; chi_H = " << colors << "\n";
        em.emit("chromatic-entropy", j, text.str());
        return 0;
    }

    if (cmd_fractional->parsed()) {
        Emitter em{frac_o};
        Graph g = load_graph(frac_o, caps);
        auto r = fractional_chromatic_number(g, caps.is_enum);
        em.emit("fractional", to_json(r), rational_to_string(r.value) + "\n");
        return 0;
    }

    if (cmd_edge->parsed()) {
        Emitter em{edge_o};
        Graph g = load_graph(edge_o, caps);
        Rational r = fractional_edge_chromatic(g, caps.odd_set);
        em.emit("fractional-edge", Json{{"value", rational_to_string(r)}},
                rational_to_string(r) + "\n");
        return 0;
    }

    if (cmd_maxent->parsed()) {
        Emitter em{maxent_o};
        Graph g = load_graph(maxent_o, caps);
        SolverConfig cfg = solver_config(maxent_o, caps);
        auto r = max_entropy_distribution(g, std::max(maxent_o.tol, 1e-6), cfg,
                                          std::max(maxent_o.budget, 200L));
        Json j{{"value_bits", r.value_bits},
               {"maximizer", r.maximizer},
               {"iterations", r.iterations},
               {"certificate_gap_bits", r.certificate_gap_bits}};
        std::ostringstream text;
        text << "max_P H_k = " << r.value_bits << " bits\n";
        em.emit("max-entropy", j, text.str());
        return 0;
    }

    if (cmd_symmetry->parsed()) {
        Emitter em{sym_o};
        // the line modifier selects the k-graph criterion, which takes the
        // base graph itself and decides about its line graph
        CommonOpts base = sym_o;
        base.line_modifier = false;
        Graph g = load_graph(base, caps);
        SolverConfig cfg = solver_config(sym_o, caps);
        SymmetryVerdict v;
        if (sym_o.line_modifier) {
            v = check_line_graph_symmetric(g, kDefaultSymmetryTol, cfg);
        } else if (sym_numeric) {
            v = numeric_symmetry_check(g, kDefaultSymmetryTol, cfg);
        } else if (bipartition(g).has_value() && g.edge_count() > 0) {
            v = check_bipartite_symmetric(g, kDefaultSymmetryTol, cfg);
        } else if (g.vertex_count() <= kDefaultPerfectHoleCap && is_perfect(g)) {
            v = check_perfect_symmetric(g, kDefaultSymmetryTol, cfg);
        } else {
            v = numeric_symmetry_check(g, kDefaultSymmetryTol, cfg);
        }
        std::ostringstream text;
        text << "symmetric: "
             << (v.symmetric == Symmetric::Yes ? "yes"
                 : v.symmetric == Symmetric::No ? "no" : "unknown")
             << " (" << v.criterion << ", gap " << v.numeric_gap_bits << " bits)\n";
        em.emit("symmetry", to_json(v), text.str());
        return 0;
    }

    if (cmd_counting->parsed()) {
        Emitter em{count_o};
        if (!points_file.empty()) {
            std::ifstream in(points_file);
            if (!in) throw InputError("cannot open points file `" + points_file + "`");
            std::vector<std::array<long long, 3>> pts;
            std::string line;
            int lineno = 0;
            while (std::getline(in, line)) {
                ++lineno;
                std::istringstream ls(line);
                std::array<long long, 3> p;
                if (line.empty()) continue;
                if (!(ls >> p[0] >> p[1] >> p[2]))
                    throw ParseError("points file line " + std::to_string(lineno) +
                                     ": expected `x y z`");
                pts.push_back(p);
            }
            auto r = shearer_check(pts);
            std::ostringstream text;
            text << "n=" << r.n << " projections=(" << r.n1 << "," << r.n2 << "," << r.n3
                 << ") holds=" << (r.holds ? "yes" : "no") << "\n";
            em.emit("counting", to_json(r), text.str());
            return 0;
        }
        Graph g = load_graph(count_o, caps);
        auto matchings = count_perfect_matchings(g, caps.permanent);
        auto bound = bregman_bound(g, caps.permanent);
        Json j{{"perfect_matchings", matchings}, {"bregman", to_json(bound)}};
        std::ostringstream text;
        text << matchings << " perfect matchings, bound " << bound.bound << ", holds "
             << (bound.holds ? "yes" : "no") << "\n";
        em.emit("counting", j, text.str());
        return 0;
    }

    if (cmd_verify->parsed()) {
        VerifyOptions opt;
        opt.seed = verify_o.seed;
        opt.quick = quick;
        opt.threads = threads;
        std::vector<CheckResult> results;
        if (suite == "paper") results = verify_paper_suite(opt);
        else if (suite == "properties") results = verify_properties_suite(opt);
        else if (suite == "all") results = verify_all(opt);
        else throw InputError("unknown suite `" + suite + "` (expected paper|properties|all)");
        bool all_pass = true;
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            if (verify_o.format == "text") {
                std::cout << (r.pass ? "PASS" : "FAIL") << " [" << r.criterion << "] " << r.name
                          << " (expected " << r.expected << ", actual " << r.actual << ")\n";
            } else {
                Json line{{"schema", 1},     {"criterion", r.criterion}, {"check", r.name},
                          {"expected", r.expected}, {"actual", r.actual},
                          {"tolerance", r.tolerance}, {"pass", r.pass}};
                std::cout << line.dump() << "\n";
            }
        }
        return all_pass ? 0 : 3;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const NonConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
