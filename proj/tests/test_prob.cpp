#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "gent/errors.hpp"
#include "gent/graph.hpp"
#include "gent/prob.hpp"
#include "test_util.hpp"

using namespace gent;

TEST_CASE("distribution validation") {
    CHECK_THROWS_AS(Distribution({0.5, 0.6}), InputError);
    CHECK_THROWS_AS(Distribution({-0.1, 1.1}), InputError);
    CHECK_THROWS_AS(Distribution({}), InputError);
    Distribution norm({2.0, 2.0}, true);
    CHECK(norm[0] == doctest::Approx(0.5));
    Distribution u = Distribution::uniform(4);
    CHECK(u[3] == doctest::Approx(0.25));
}

TEST_CASE("entropy values") {
    CHECK(entropy(Distribution({0.5, 0.5})) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy(Distribution({0.4, 0.4, 0.2})) ==
          doctest::Approx(1.5219280948873623).epsilon(1e-12));
    CHECK(entropy(Distribution({1.0})) == 0.0);
}

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.25) == doctest::Approx(0.8112781244591329).epsilon(1e-12));
    CHECK_THROWS_AS(binary_entropy(1.5), InputError);
    CHECK_THROWS_AS(binary_entropy(-0.1), InputError);
}

TEST_CASE("kl divergence") {
    Distribution p({0.3, 0.7});
    CHECK(kl_divergence(p, p) == doctest::Approx(0.0));
    CHECK(kl_divergence(Distribution({1.0, 0.0}), Distribution({0.5, 0.5})) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kl_divergence(Distribution({0.4, 0.6}), Distribution({0.5, 0.5})) ==
          doctest::Approx(0.029049405545331361).epsilon(1e-12));
    CHECK(std::isinf(kl_divergence(Distribution({0.5, 0.5}), Distribution({1.0, 0.0}))));
    CHECK_THROWS_AS(kl_divergence(p, Distribution({1.0})), InputError);
}

TEST_CASE("mutual information") {
    auto prod = JointDistribution::product(Distribution({0.3, 0.7}), Distribution({0.2, 0.5, 0.3}));
    CHECK(mutual_information(prod) == doctest::Approx(0.0));

    JointDistribution fair(2, 2, {0.5, 0.0, 0.0, 0.5});
    CHECK(mutual_information(fair) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(conditional_entropy(fair) == doctest::Approx(0.0));

    auto indep = JointDistribution::product(Distribution({0.5, 0.5}), Distribution({0.5, 0.5}));
    CHECK(conditional_entropy(indep) == doctest::Approx(1.0).epsilon(1e-12));

    // C5 example: uniform vertex, uniform containing maximal independent set
    Graph c5 = make_cycle(5);
    auto sets = maximal_independent_sets(c5);
    REQUIRE(sets.size() == 5);
    std::vector<double> q(5 * 5, 0.0);
    for (int v = 0; v < 5; ++v)
        for (int f = 0; f < 5; ++f)
            if (sets[f].test(v)) q[v * 5 + f] = 0.1;
    JointDistribution joint(5, 5, q);
    CHECK(mutual_information(joint) == doctest::Approx(1.3219280948873623).epsilon(1e-12));
}

TEST_CASE("information identities on random joints") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        int rows = 2 + int(rng() % 4), cols = 2 + int(rng() % 4);
        std::vector<double> q(std::size_t(rows) * cols);
        double sum = 0.0;
        for (auto& x : q) {
            x = unif(rng);
            sum += x;
        }
        for (auto& x : q) x /= sum;
        JointDistribution j(rows, cols, q);
        double hx = shannon_bits(j.row_marginal());
        double hy = shannon_bits(j.col_marginal());
        double hxy = joint_entropy(j);
        CHECK(mutual_information(j) == doctest::Approx(hx + hy - hxy).epsilon(1e-10));
        CHECK(hxy == doctest::Approx(hx + conditional_entropy(j)).epsilon(1e-10)); // chain rule
        CHECK(conditional_entropy(j) <= hy + 1e-12);                               // H(Y|X) <= H(Y)
        CHECK(mutual_information(j) >= -1e-12);
        // symmetry via transpose
        std::vector<double> qt(q.size());
        for (int a = 0; a < rows; ++a)
            for (int b = 0; b < cols; ++b) qt[std::size_t(b) * rows + a] = j(a, b);
        JointDistribution jt(cols, rows, qt);
        CHECK(mutual_information(jt) == doctest::Approx(mutual_information(j)).epsilon(1e-10));
    }
}

TEST_CASE("entropy bounds on random distributions") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 50; ++rep) {
        int n = 2 + int(rng() % 8);
        auto p = test::random_distribution(rng, n);
        double h = entropy(p);
        CHECK(h >= 0.0);
        CHECK(h <= std::log2(double(n)) + 1e-12);
    }
    // equality only at uniform
    CHECK(entropy(Distribution::uniform(8)) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(entropy(Distribution({0.3, 0.2, 0.25, 0.25})) < 2.0 - 1e-3);
}
