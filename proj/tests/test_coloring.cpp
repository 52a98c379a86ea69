#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gent/coloring.hpp"
#include "gent/errors.hpp"
#include "test_util.hpp"

using namespace gent;

namespace {

// unpruned exhaustive minimum over all proper colorings (partitions into
// independent sets), for soundness checks on small graphs
double exhaustive_min_entropy(const Graph& g, const Distribution& p, int* fewest = nullptr) {
    int n = g.vertex_count();
    std::vector<int> assign(n, -1);
    double best = std::numeric_limits<double>::infinity();
    int best_count = n + 1;
    auto entropy_of = [&](int classes) {
        std::vector<double> mass(classes, 0.0);
        for (int v = 0; v < n; ++v) mass[assign[v]] += p[v];
        return shannon_bits(mass);
    };
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (v == n) {
            double h = entropy_of(used);
            if (h < best - 1e-9) {
                best = h;
                best_count = used;
            } else if (h <= best + 1e-9) {
                best_count = std::min(best_count, used);
                best = std::min(best, h);
            }
            return;
        }
        for (int c = 0; c <= used; ++c) {
            if (c == used && used == n) break;
            bool ok = true;
            g.neighbors(v).for_each([&](int u) {
                if (u < v && assign[u] == c) ok = false;
            });
            if (!ok) continue;
            assign[v] = c;
            rec(v + 1, std::max(used, c + 1));
            assign[v] = -1;
        }
    };
    rec(0, 0);
    if (fewest) *fewest = best_count;
    return best;
}

} // namespace

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(make_cycle(5)).chi == 3);
    CHECK(chromatic_number(make_petersen()).chi == 3);
    CHECK(chromatic_number(make_complete(4)).chi == 4);
    CHECK(chromatic_number(make_cycle(6)).chi == 2);
    CHECK(chromatic_number(make_kneser(5, 2)).chi == 3);
    auto res = chromatic_number(make_fig52());
    CHECK(res.chi == 3);
    CHECK(is_proper_coloring(make_fig52(), res.witness));
    CHECK(int(res.witness.classes.size()) == res.chi);
    CHECK_THROWS_AS(chromatic_number(make_empty(70)), CapExceeded);
}

TEST_CASE("grundy number") {
    CHECK(grundy_number(make_path(4)).gamma == 3);
    CHECK(grundy_number(make_complete(5)).gamma == 5);
    CHECK(grundy_number(make_empty(6)).gamma == 1);
    CHECK(grundy_number(make_cycle(6)).gamma == 3);
    auto res = grundy_number(make_petersen());
    CHECK(is_grundy_coloring(make_petersen(), res.witness));
    CHECK(int(res.witness.classes.size()) == res.gamma);
    CHECK_THROWS_AS(grundy_number(make_complete(13)), CapExceeded);
}

TEST_CASE("minimum entropy coloring paper values") {
    auto c5u = min_entropy_coloring(make_cycle(5), Distribution::uniform(5));
    CHECK(c5u.entropy_bits == doctest::Approx(1.5219280948873623).epsilon(1e-9));
    std::vector<int> sizes;
    for (const auto& cls : c5u.coloring.classes) sizes.push_back(cls.count());
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    CHECK(sizes == std::vector<int>{2, 2, 1});

    // vertices v1..v5 with p = (0.3, 0.2, 0.2, 0.1, 0.2): classes {v1,v3},
    // {v2,v5}, {v4}
    Distribution p({0.3, 0.2, 0.2, 0.1, 0.2});
    auto c5p = min_entropy_coloring(make_cycle(5), p);
    CHECK(c5p.entropy_bits == doctest::Approx(1.3609640474436812).epsilon(1e-9));
    auto seq = color_sequence(c5p.coloring, p);
    CHECK(seq[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(seq[1] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(seq[2] == doctest::Approx(0.1).epsilon(1e-12));

    // 7-star with a heavy hub: exactly one bit
    std::vector<double> star(8, 1.0 / 14.0);
    star[0] = 0.5;
    auto s = min_entropy_coloring(make_star(7), Distribution(star));
    CHECK(s.entropy_bits == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.coloring.classes.size() == 2);
}

TEST_CASE("minimum entropy colorings satisfy the grundy property") {
    std::mt19937_64 rng(73);
    for (int rep = 0; rep < 15; ++rep) {
        int n = 2 + int(rng() % 7);
        Graph g = test::random_graph(rng, n);
        auto p = test::random_distribution(rng, n);
        auto res = min_entropy_coloring(g, p);
        CHECK(is_proper_coloring(g, res.coloring));
        CHECK(is_grundy_coloring(g, res.coloring));
    }
}

TEST_CASE("pruned search equals exhaustive search") {
    std::mt19937_64 rng(79);
    for (int rep = 0; rep < 12; ++rep) {
        int n = 2 + int(rng() % 7); // up to 8 vertices
        Graph g = test::random_graph(rng, n);
        auto p = test::random_distribution(rng, n);
        int fewest = 0;
        double expect = exhaustive_min_entropy(g, p, &fewest);
        auto got = min_entropy_coloring(g, p);
        CHECK(got.entropy_bits == doctest::Approx(expect).epsilon(1e-9));
        CHECK(chi_H(g, p) == fewest);
    }
}

TEST_CASE("chi_H") {
    // C6 with 0.4 mass on two opposite vertices wants three colors even
    // though two suffice
    Distribution p({0.4, 0.05, 0.05, 0.4, 0.05, 0.05});
    CHECK(chi_H(make_cycle(6), p) == 3);
    std::mt19937_64 rng(83);
    for (int n : {3, 4, 5}) CHECK(chi_H(make_complete(n), test::random_distribution(rng, n)) == n);
    CHECK(chi_H(make_kneser(5, 2), Distribution::uniform(10)) == 3);
}

TEST_CASE("two grundy colorings of C6 with different entropies") {
    // classes {v1,v4},{v3,v6},{v2,v5} versus the bipartition, under
    // p = (0.4, 0.05, 0.4, 0.05, 0.05, 0.05)
    Graph c6 = make_cycle(6);
    Distribution p({0.4, 0.05, 0.4, 0.05, 0.05, 0.05});
    Coloring a{{Bitset::from_mask(6, 0b001001), Bitset::from_mask(6, 0b100100),
                Bitset::from_mask(6, 0b010010)}};
    Coloring b{{Bitset::from_mask(6, 0b010101), Bitset::from_mask(6, 0b101010)}};
    REQUIRE(is_grundy_coloring(c6, a));
    REQUIRE(is_grundy_coloring(c6, b));
    double ha = shannon_bits(color_sequence(a, p));
    double hb = shannon_bits(color_sequence(b, p));
    CHECK(ha != doctest::Approx(hb).epsilon(1e-6)); // strictly different
    CHECK(hb < ha);                                 // the 2-coloring wins here
}

TEST_CASE("max chi_H equals the grundy number") {
    for (const Graph& g : {make_cycle(6), make_complete(3), make_path(4), make_star(3)}) {
        auto res = max_chi_H(g);
        CHECK(res.value == grundy_number(g).gamma);
        CHECK(res.witness_verified);
        // no distribution exceeds Gamma
        std::mt19937_64 rng(89);
        for (int rep = 0; rep < 10; ++rep)
            CHECK(chi_H(g, test::random_distribution(rng, g.vertex_count())) <= res.value);
    }
}

TEST_CASE("clique entropy") {
    SolverConfig cfg;
    CHECK(clique_entropy(make_empty(5), Distribution::uniform(5), cfg) ==
          doctest::Approx(0.0).epsilon(2e-7));
    std::mt19937_64 rng(97);
    auto p = test::random_distribution(rng, 4);
    CHECK(clique_entropy(make_complete(4), p, cfg) ==
          doctest::Approx(entropy(p)).epsilon(2e-7));
    CHECK(clique_entropy(make_cycle(5), Distribution::uniform(5), cfg) ==
          doctest::Approx(1.0).epsilon(2e-7));
}

TEST_CASE("chromatic entropy lower bound") {
    CHECK(chromatic_entropy_lower_bound(make_cycle(5)) ==
          doctest::Approx(1.3219280948873623).epsilon(1e-12));
    CHECK(chromatic_entropy_lower_bound(make_complete(6)) ==
          doctest::Approx(std::log2(6.0)).epsilon(1e-12));
    CHECK(chromatic_entropy_lower_bound(make_petersen()) ==
          doctest::Approx(1.3219280948873623).epsilon(1e-12));
}

TEST_CASE("degree bounds on chi_H") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 12; ++rep) {
        int n = 3 + int(rng() % 6);
        Graph g = test::random_graph(rng, n);
        auto p = test::random_distribution(rng, n);
        CHECK(chi_H(g, p) <= g.max_degree() + 1);
    }
    // Brooks-style bound at the uniform distribution: connected, neither
    // complete nor an odd cycle
    CHECK(chi_H(make_cycle(6), Distribution::uniform(6)) <= 2);
    CHECK(chi_H(make_petersen(), Distribution::uniform(10)) <= 3);
    CHECK(chi_H(make_path(5), Distribution::uniform(5)) <= 2);
}

TEST_CASE("sandwich chain") {
    std::mt19937_64 rng(103);
    SolverConfig cfg;
    cfg.tol_bits = 1e-7;
    for (int rep = 0; rep < 12; ++rep) {
        int n = 2 + int(rng() % 9);
        Graph g = test::random_graph(rng, n);
        auto p = test::random_distribution(rng, n);
        double alpha_p = max_weight_independent_set(g, p.values()).weight;
        double hk = entropy_fw(g, p, cfg).value_bits;
        double hchi = min_entropy_coloring(g, p).entropy_bits;
        double logchi = std::log2(double(chromatic_number(g).chi));
        CHECK(-std::log2(alpha_p) <= hk + 1e-5);
        CHECK(hk <= hchi + 1e-5);
        CHECK(hchi <= logchi + 1e-5);
    }
}
