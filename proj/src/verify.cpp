#include "gent/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "gent/closed_forms.hpp"
#include "gent/coloring.hpp"
#include "gent/corner.hpp"
#include "gent/counting.hpp"
#include "gent/errors.hpp"
#include "gent/fractional.hpp"
#include "gent/graph.hpp"
#include "gent/prob.hpp"
#include "gent/symmetry.hpp"

namespace gent {

namespace {

constexpr double kLog2_5 = 1.3219280948873623;  // log2(5/2)
constexpr double kLog3_5 = 1.8073549220576041;  // log2(7/2)

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

CheckResult numeric_check(int criterion, std::string name, double expected, double actual,
                          double tol) {
    return {criterion, std::move(name), fmt(expected), fmt(actual), tol,
            std::abs(expected - actual) <= tol};
}

CheckResult bound_check(int criterion, std::string name, std::string expected, double actual,
                        double tol, bool pass) {
    return {criterion, std::move(name), std::move(expected), fmt(actual), tol, pass};
}

Distribution random_distribution(std::mt19937_64& rng, int n) {
    std::exponential_distribution<double> exp_dist(1.0);
    std::vector<double> p(n);
    for (auto& x : p) x = exp_dist(rng) + 1e-12;
    return Distribution(p, true);
}

Graph random_graph(std::mt19937_64& rng, int n, double density = 0.5) {
    Graph g(n);
    std::bernoulli_distribution coin(density);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

int pair_index(int n, int u, int v) {
    // lexicographic pairs (0,1),(0,2),...,(n-2,n-1)
    return u * n - u * (u + 3) / 2 + v - 1;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (mask >> pair_index(n, u, v) & 1) g.add_edge(u, v);
    return g;
}

// ---------------------------------------------------------------------------
// Nonisomorphic census by canonical augmentation
// ---------------------------------------------------------------------------

std::uint64_t canonical_mask(std::uint64_t mask,
                             const std::vector<std::vector<int>>& pair_maps) {
    std::uint64_t best = ~std::uint64_t(0);
    for (const auto& map : pair_maps) {
        std::uint64_t img = 0;
        for (std::uint64_t m = mask; m;) {
            int b = std::countr_zero(m);
            m &= m - 1;
            img |= std::uint64_t(1) << map[b];
        }
        best = std::min(best, img);
    }
    return best;
}

std::vector<std::vector<int>> permutation_pair_maps(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> maps;
    do {
        std::vector<int> map(n * (n - 1) / 2);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int a = perm[u], b = perm[v];
                if (a > b) std::swap(a, b);
                map[pair_index(n, u, v)] = pair_index(n, a, b);
            }
        maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

} // namespace

std::vector<std::uint64_t> nonisomorphic_graph_masks(int n) {
    if (n < 1 || n > 7) throw InputError("census supports 1 <= n <= 7");
    std::vector<std::set<std::uint64_t>> levels(n + 1);
    levels[1].insert(0);
    for (int k = 2; k <= n; ++k) {
        auto maps = permutation_pair_maps(k);
        std::set<std::uint64_t>& out = levels[k];
        for (std::uint64_t prev : levels[k - 1]) {
            // re-index the smaller graph's pairs inside the larger pair space
            std::uint64_t base = 0;
            for (int u = 0; u < k - 1; ++u)
                for (int v = u + 1; v < k - 1; ++v)
                    if (prev >> pair_index(k - 1, u, v) & 1)
                        base |= std::uint64_t(1) << pair_index(k, u, v);
            for (std::uint64_t nb = 0; nb < (std::uint64_t(1) << (k - 1)); ++nb) {
                std::uint64_t mask = base;
                for (int u = 0; u < k - 1; ++u)
                    if (nb >> u & 1) mask |= std::uint64_t(1) << pair_index(k, u, k - 1);
                out.insert(canonical_mask(mask, maps));
            }
        }
    }
    return {levels[n].begin(), levels[n].end()};
}

// ---------------------------------------------------------------------------
// Fixed-input reference suite (the `paper` checks)
// ---------------------------------------------------------------------------

namespace {

void criterion2_vertex_transitive(std::vector<CheckResult>& out) {
    SolverConfig cfg;
    cfg.tol_bits = 1e-7;
    double c5 = entropy_fw(make_cycle(5), Distribution::uniform(5), cfg).value_bits;
    out.push_back(numeric_check(2, "H_k(C5,U) = log2(5/2)", kLog2_5, c5, 1e-6));
    double pet = entropy_fw(make_petersen(), Distribution::uniform(10), cfg).value_bits;
    out.push_back(numeric_check(2, "H_k(Petersen,U) = log2(5/2)", kLog2_5, pet, 1e-6));
    double chi_f_c5 = std::log2(fractional_chromatic_number(make_cycle(5)).value.get_d());
    double chi_f_pet = std::log2(fractional_chromatic_number(make_petersen()).value.get_d());
    out.push_back(numeric_check(2, "H_k(C5,U) = log2 chi_f(C5)", chi_f_c5, c5, 1e-6));
    out.push_back(numeric_check(2, "H_k(Petersen,U) = log2 chi_f(Petersen)", chi_f_pet, pet, 1e-6));
}

void criterion3_line_graph_value(std::vector<CheckResult>& out) {
    SolverConfig cfg;
    cfg.tol_bits = 1e-7;
    Graph lf52 = line_graph(make_fig52()).graph;
    double h = entropy_fw(lf52, Distribution::uniform(15), cfg).value_bits;
    out.push_back(numeric_check(3, "H_k(L(fig52),U) = 1.75712", 1.75712, h, 1e-3));
    Rational edge = fractional_edge_chromatic(make_fig52());
    out.push_back({3, "chi_f'(fig52) = 7/2", "7/2", rational_to_string(edge), 0.0,
                   edge == Rational(7, 2)});
    out.push_back(numeric_check(3, "log2(7/2) - H_k(L(fig52),U) = 0.05023", kLog3_5 - 1.75712,
                                kLog3_5 - h, 1e-3));
}

void criterion4_bipartite_symmetry(std::vector<CheckResult>& out) {
    std::vector<std::pair<std::string, Graph>> corpus;
    for (int n = 2; n <= 12; ++n) corpus.emplace_back("path " + std::to_string(n), make_path(n));
    for (int n = 4; n <= 12; n += 2)
        corpus.emplace_back("cycle " + std::to_string(n), make_cycle(n));
    for (int k = 1; k <= 11; ++k) corpus.emplace_back("star " + std::to_string(k), make_star(k));
    for (int m = 1; m <= 6; ++m)
        for (int n = m; m + n <= 12; ++n)
            corpus.emplace_back("K_{" + std::to_string(m) + "," + std::to_string(n) + "}",
                                make_complete_multipartite({m, n}));
    Graph c4c6(10);
    for (int i = 0; i < 4; ++i) c4c6.add_edge(i, (i + 1) % 4);
    for (int i = 0; i < 6; ++i) c4c6.add_edge(4 + i, 4 + (i + 1) % 6);
    corpus.emplace_back("C4+C6", c4c6);

    int mismatches = 0;
    double worst_pm_dev = 0.0;
    for (const auto& [name, g] : corpus) {
        auto structural = check_bipartite_symmetric(g, 1e-4);
        bool numeric_sym = structural.numeric_gap_bits <= 1e-4;
        if ((structural.symmetric == Symmetric::Yes) != numeric_sym) ++mismatches;
        if (structural.symmetric == Symmetric::Yes) {
            SolverConfig cfg;
            cfg.tol_bits = 1e-7;
            double h = entropy_fw(g, Distribution::uniform(g.vertex_count()), cfg).value_bits;
            worst_pm_dev = std::max(worst_pm_dev, std::abs(h - 1.0));
        }
    }
    out.push_back(bound_check(4, "structural = numeric on bipartite corpus", "0 mismatches",
                              double(mismatches), 0.0, mismatches == 0));
    out.push_back(bound_check(4, "perfect-matching graphs reach H_k(G,U) = 1",
                              "max deviation <= 1e-5", worst_pm_dev, 1e-5, worst_pm_dev <= 1e-5));
}

void criterion5_chromatic_entropy(std::vector<CheckResult>& out) {
    double u = min_entropy_coloring(make_cycle(5), Distribution::uniform(5)).entropy_bits;
    out.push_back(numeric_check(5, "H_chi(C5,U)", 1.5219280948873623, u, 1e-9));
    double p = min_entropy_coloring(make_cycle(5), Distribution({0.3, 0.2, 0.2, 0.1, 0.2}))
                   .entropy_bits;
    out.push_back(numeric_check(5, "H_chi(C5,(0.3,0.2,0.2,0.1,0.2))", 1.3609640474436812, p, 1e-9));
    std::vector<double> star(8, 1.0 / 14.0);
    star[0] = 0.5;
    double s = min_entropy_coloring(make_star(7), Distribution(star)).entropy_bits;
    out.push_back(numeric_check(5, "H_chi(7-star, heavy hub) = 1", 1.0, s, 1e-12));
}

void criterion9_kneser(std::vector<CheckResult>& out) {
    for (int v : {4, 5, 6}) {
        Graph g = make_kneser(v, 2);
        int chi = chromatic_number(g).chi;
        int ch = chi_H(g, Distribution::uniform(g.vertex_count()), 15);
        out.push_back(bound_check(9,
                                  "chi_H(K_{" + std::to_string(v) + ":2},U) = chi = " +
                                      std::to_string(chi),
                                  std::to_string(chi), double(ch), 0.0, ch == chi));
    }
}

void criterion10_conormal_sanity(std::vector<CheckResult>& out) {
    std::vector<std::pair<std::string, Graph>> graphs{{"K2", make_complete(2)},
                                                      {"K3", make_complete(3)},
                                                      {"C5", make_cycle(5)},
                                                      {"C4", make_cycle(4)}};
    for (const auto& [name, g] : graphs) {
        double logchif = std::log2(fractional_chromatic_number(g).value.get_d());
        double s1 = std::log2(double(chromatic_number(g).chi));
        double s2 = 0.5 * std::log2(double(chromatic_number(conormal_power(g, 2)).chi));
        bool pass = s1 >= logchif - 1e-9 && s2 >= logchif - 1e-9 && s2 <= s1 + 1e-9;
        out.push_back(bound_check(10, "conormal chromatic sequence of " + name,
                                  "log chi_f <= (1/2)log chi(G^(2)) <= log chi(G)", s2, 1e-9,
                                  pass));
    }
}

// ---------------------------------------------------------------------------
// Property suite (seeded)
// ---------------------------------------------------------------------------

void criterion1_complete_identity(std::vector<CheckResult>& out, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 101 + 1);
    SolverConfig cfg;
    cfg.tol_bits = 1e-7;
    double worst = 0.0;
    for (int n = 2; n <= 8; ++n) {
        Graph g = make_complete(n);
        for (int rep = 0; rep < 20; ++rep) {
            auto p = random_distribution(rng, n);
            double h = entropy(p);
            worst = std::max(worst, std::abs(entropy_fw(g, p, cfg).value_bits - h));
            worst = std::max(worst, std::abs(entropy_am(g, p, cfg).value_bits - h));
        }
    }
    out.push_back(bound_check(1, "H_k(K_n,P) = H(P), n = 2..8, both solvers",
                              "max deviation <= 1e-6", worst, 1e-6, worst <= 1e-6));
}

void criterion6_sandwich(std::vector<CheckResult>& out, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 101 + 6);
    SolverConfig cfg;
    cfg.tol_bits = 1e-7;
    int violations = 0;
    double slack = 1e-5;
    for (int rep = 0; rep < 200; ++rep) {
        int n = 2 + int(rng() % 9);
        Graph g = random_graph(rng, n);
        auto p = random_distribution(rng, n);
        double alpha_p = max_weight_independent_set(g, p.values()).weight;
        double hk = entropy_fw(g, p, cfg).value_bits;
        double hchi = min_entropy_coloring(g, p).entropy_bits;
        double logchi = std::log2(double(chromatic_number(g).chi));
        if (-std::log2(alpha_p) > hk + slack || hk > hchi + slack || hchi > logchi + slack)
            ++violations;
    }
    out.push_back(bound_check(6, "sandwich chain on 200 random (G,P), n <= 10", "0 violations",
                              double(violations), slack, violations == 0));
}

void criterion7_splitting(std::vector<CheckResult>& out, std::uint64_t seed, bool quick,
                          int threads) {
    struct Item {
        int n;
        std::uint64_t mask;
    };
    std::vector<Item> graphs;
    for (int n = 1; n <= 7; ++n)
        for (auto m : nonisomorphic_graph_masks(n)) graphs.push_back({n, m});
    // census sizes for graphs on 1..7 vertices
    std::size_t expected_total = 1 + 2 + 4 + 11 + 34 + 156 + 1044;
    bool census_ok = graphs.size() == expected_total;

    if (quick) {
        std::mt19937_64 rng(seed * 101 + 7);
        std::shuffle(graphs.begin(), graphs.end(), rng);
        graphs.resize(50);
    }

    std::atomic<std::size_t> next{0};
    std::mutex mu;
    double perfect_worst = 0.0;   // max |gap| over perfect graphs
    double imperfect_worst = 1e9; // min over imperfect graphs of witnessed gap
    auto worker = [&]() {
        SolverConfig cfg;
        cfg.tol_bits = 1e-7;
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= graphs.size()) break;
            Graph g = graph_from_mask(graphs[i].n, graphs[i].mask);
            bool perfect = is_perfect(g);
            std::mt19937_64 rng(seed * 7919 + graphs[i].mask * 31 + graphs[i].n);
            double max_abs = 0.0, max_gap = -1e9;
            for (int rep = 0; rep < 10; ++rep) {
                auto p = random_distribution(rng, graphs[i].n);
                double gap = splitting_gap(g, p, cfg);
                max_abs = std::max(max_abs, std::abs(gap));
                max_gap = std::max(max_gap, gap);
            }
            if (!perfect && max_gap <= 1e-3) {
                // some imperfect graphs split on almost all of the simplex;
                // mass concentrated on an induced odd hole (of the graph or
                // its complement) always witnesses the violation
                auto hole = find_odd_hole(g);
                if (!hole) hole = find_odd_hole(complement(g));
                if (hole) {
                    std::vector<double> p(graphs[i].n, 0.0);
                    hole->for_each([&](int v) { p[v] = 1.0; });
                    max_gap = std::max(max_gap,
                                       splitting_gap(g, Distribution(p, true), cfg));
                }
            }
            std::lock_guard<std::mutex> lock(mu);
            if (perfect) {
                perfect_worst = std::max(perfect_worst, max_abs);
            } else {
                imperfect_worst = std::min(imperfect_worst, max_gap);
            }
        }
    };
    int nthreads = threads > 0 ? threads : int(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min<int>(nthreads, 16));
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::string label = quick ? " (50-graph sample)" : "";
    out.push_back(bound_check(7, "census of graphs on <= 7 vertices", "1252",
                              double(graphs.size()), 0.0, census_ok || quick));
    out.push_back(bound_check(7, "perfect graphs split exactly" + label, "max |gap| <= 1e-5",
                              perfect_worst, 1e-5, perfect_worst <= 1e-5));
    out.push_back(bound_check(7, "imperfect graphs show a gap" + label, "min witnessed gap > 1e-3",
                              imperfect_worst, 1e-3, imperfect_worst > 1e-3));
}

void criterion8_grundy(std::vector<CheckResult>& out, std::uint64_t seed) {
    std::vector<std::pair<std::string, Graph>> corpus;
    for (int n = 2; n <= 10; ++n) corpus.emplace_back("path " + std::to_string(n), make_path(n));
    for (int n = 3; n <= 10; ++n) corpus.emplace_back("cycle " + std::to_string(n), make_cycle(n));
    for (int k = 1; k <= 9; ++k) corpus.emplace_back("star " + std::to_string(k), make_star(k));
    corpus.emplace_back("petersen", make_petersen());
    corpus.emplace_back("fig51", make_fig51());

    std::mt19937_64 rng(seed * 101 + 8);
    int failures = 0;
    std::string first_failure;
    for (const auto& [name, g] : corpus) {
        int gamma = grundy_number(g).gamma;
        auto witness = max_chi_H(g);
        int max_seen = witness.witness_verified ? gamma : 0;
        for (int rep = 0; rep < 50; ++rep) {
            int ch = chi_H(g, random_distribution(rng, g.vertex_count()));
            if (ch > gamma) max_seen = gamma + 1; // exceeding Gamma is a failure
            max_seen = std::max(max_seen, ch);
        }
        if (max_seen != gamma) {
            ++failures;
            if (first_failure.empty()) first_failure = name;
        }
    }
    out.push_back(bound_check(8, "max_P chi_H = Gamma on paths/cycles/stars/petersen/fig51",
                              "0 failures", double(failures), 0.0, failures == 0));
}

void criterion11_cross_algorithm(std::vector<CheckResult>& out, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 101 + 11);
    SolverConfig cfg;
    cfg.tol_bits = 1e-7;
    double worst = 0.0;
    for (int rep = 0; rep < 500; ++rep) {
        int n = 2 + int(rng() % 9);
        Graph g = random_graph(rng, n);
        auto p = random_distribution(rng, n);
        double fw = entropy_fw(g, p, cfg).value_bits;
        double am = entropy_am(g, p, cfg).value_bits;
        worst = std::max(worst, std::abs(fw - am));
    }
    out.push_back(bound_check(11, "|fw - am| on 500 random (G,P), n <= 10",
                              "max difference <= 2e-7", worst, 2e-7, worst <= 2e-7));
}

void criterion12_counting(std::vector<CheckResult>& out, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 101 + 12);
    int shearer_failures = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        std::set<std::array<long long, 3>> pts;
        int want = 1 + int(rng() % 60);
        while (int(pts.size()) < want)
            pts.insert({(long long)(rng() % 6), (long long)(rng() % 6), (long long)(rng() % 6)});
        if (!shearer_check({pts.begin(), pts.end()}).holds) ++shearer_failures;
    }
    out.push_back(bound_check(12, "Shearer on 1000 random point sets", "0 failures",
                              double(shearer_failures), 0.0, shearer_failures == 0));

    int bregman_failures = 0;
    int done = 0;
    while (done < 1000) {
        int m = 1 + int(rng() % 7);
        Graph g(2 * m);
        std::bernoulli_distribution coin(0.55);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (coin(rng)) g.add_edge(a, m + b);
        bool isolated = false;
        for (int v = 0; v < 2 * m; ++v)
            if (g.degree(v) == 0) isolated = true;
        if (isolated) continue;
        if (!bregman_bound(g).holds) ++bregman_failures;
        ++done;
    }
    out.push_back(bound_check(12, "Bregman on 1000 random bipartite graphs", "0 failures",
                              double(bregman_failures), 0.0, bregman_failures == 0));

    auto k33 = bregman_bound(make_complete_multipartite({3, 3}));
    bool equality = k33.count == 6 && std::abs(k33.bound - 6.0) <= 1e-9;
    out.push_back(bound_check(12, "K_{3,3} meets the Bregman bound with equality", "6", k33.bound,
                              1e-9, equality));
}

} // namespace

std::vector<CheckResult> verify_paper_suite(const VerifyOptions& opt) {
    (void)opt;
    std::vector<CheckResult> out;
    criterion2_vertex_transitive(out);
    criterion3_line_graph_value(out);
    criterion4_bipartite_symmetry(out);
    criterion5_chromatic_entropy(out);
    criterion9_kneser(out);
    criterion10_conormal_sanity(out);
    return out;
}

std::vector<CheckResult> verify_properties_suite(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    criterion1_complete_identity(out, opt.seed);
    criterion6_sandwich(out, opt.seed);
    criterion7_splitting(out, opt.seed, opt.quick, opt.threads);
    criterion8_grundy(out, opt.seed);
    criterion11_cross_algorithm(out, opt.seed);
    criterion12_counting(out, opt.seed);
    return out;
}

std::vector<CheckResult> verify_all(const VerifyOptions& opt) {
    auto out = verify_paper_suite(opt);
    auto props = verify_properties_suite(opt);
    out.insert(out.end(), props.begin(), props.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const CheckResult& a, const CheckResult& b) {
                         return a.criterion < b.criterion;
                     });
    return out;
}

} // namespace gent
