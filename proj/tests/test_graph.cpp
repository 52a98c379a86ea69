#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gent/errors.hpp"
#include "gent/graph.hpp"
#include "test_util.hpp"

using namespace gent;

TEST_CASE("dimacs parsing") {
    Graph k2 = parse_dimacs("p edge 2 1\ne 1 2\n");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.has_edge(0, 1));

    Graph c5 = parse_dimacs("c five cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    CHECK(c5 == make_cycle(5));

    CHECK_THROWS_WITH_AS(parse_dimacs("p edge 3 1\ne 1 4\n"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 2 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\nq 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs(""), ParseError);

    // duplicate edges collapse
    Graph dup = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n");
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("dimacs round trip") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = test::random_graph(rng, 1 + int(rng() % 12));
        CHECK(parse_dimacs(to_dimacs(g)) == g);
    }
}

TEST_CASE("generators") {
    Graph kneser = make_kneser(5, 2);
    CHECK(kneser.vertex_count() == 10);
    CHECK(is_k_regular(kneser, 3));
    // triangle-free and C4-free pins the Petersen graph among cubic graphs
    // on ten vertices
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) {
            if (kneser.has_edge(u, v)) CHECK(!(kneser.neighbors(u) & kneser.neighbors(v)).any());
            else CHECK((kneser.neighbors(u) & kneser.neighbors(v)).count() <= 1);
        }
    Graph petersen = make_petersen();
    CHECK(is_k_regular(petersen, 3));
    CHECK(petersen.edge_count() == 15);

    Graph f52 = generate("fig52", {});
    CHECK(f52.vertex_count() == 10);
    CHECK(f52.edge_count() == 15);
    auto br = bridges(f52);
    REQUIRE(br.size() == 1);
    CHECK(br[0] == std::pair<int, int>(4, 5));
    CHECK(is_k_regular(f52, 3));

    Graph f51 = generate("fig51", {});
    CHECK(f51.vertex_count() == 6);
    CHECK(f51.edge_count() == 9);
    CHECK(is_k_regular(f51, 3));
    CHECK(bridges(f51).empty());

    Graph k22 = generate("complete_multipartite", {2, 2});
    CHECK(k22.vertex_count() == 4);
    CHECK(k22.edge_count() == 4);
    CHECK(is_k_regular(k22, 2));
    CHECK(bipartition(k22).has_value());
    CHECK(components(k22).size() == 1);

    CHECK(make_star(3).degree(0) == 3);
    CHECK_THROWS_AS(generate("bogus", {}), InputError);
    CHECK_THROWS_AS(generate("kneser", {3, 2}), InputError);
    CHECK_THROWS_AS(generate("cycle", {}), InputError);
}

TEST_CASE("complement and union") {
    CHECK(complement(make_complete(4)) == make_empty(4));
    Graph cc5 = complement(make_cycle(5));
    CHECK(cc5.vertex_count() == 5);
    CHECK(cc5.edge_count() == 5);
    CHECK(is_k_regular(cc5, 2));
    Graph f51 = make_fig51();
    CHECK(complement(complement(f51)) == f51);

    CHECK(union_graphs(make_cycle(5), complement(make_cycle(5))) == make_complete(5));
    CHECK(union_graphs(f51, make_empty(6)) == f51);
    CHECK(union_graphs(make_path(4), make_path(4)) == make_path(4));
    CHECK_THROWS_AS(union_graphs(make_path(3), make_path(4)), InputError);
}

TEST_CASE("substitution builds the triangle-for-vertex graph") {
    // C5 with a triangle substituted for vertex 0; remaining cycle vertices
    // come first (path u2-u3-u4-u5), triangle copies last
    Graph r = substitute(make_cycle(5), 0, make_complete(3));
    REQUIRE(r.vertex_count() == 7);
    CHECK(r.edge_count() == 12);
    Graph expect(7);
    expect.add_edge(0, 1); // u2-u3
    expect.add_edge(1, 2); // u3-u4
    expect.add_edge(2, 3); // u4-u5
    for (int t = 4; t < 7; ++t) {
        expect.add_edge(0, t); // u2 to each triangle vertex
        expect.add_edge(3, t); // u5 to each triangle vertex
    }
    expect.add_edge(4, 5);
    expect.add_edge(4, 6);
    expect.add_edge(5, 6);
    CHECK(r == expect);

    CHECK(substitute(make_complete(2), 0, make_complete(1)) == make_complete(2));
    CHECK(substitute(make_empty(2), 0, make_empty(3)) == make_empty(4));
    CHECK_THROWS_AS(substitute(make_cycle(4), 9, make_complete(2)), InputError);

    // substituting at an interior vertex reindexes the survivors
    Graph mid = substitute(make_path(3), 1, make_complete(2));
    Graph expect_mid(4); // survivors a,c then the K2 copies x,y
    expect_mid.add_edge(2, 3);
    for (int survivor : {0, 1})
        for (int copy : {2, 3}) expect_mid.add_edge(survivor, copy);
    CHECK(mid == expect_mid);
}

TEST_CASE("graph powers") {
    CHECK(conormal_power(make_complete(2), 2) == make_complete(4));
    Graph c5 = make_cycle(5);
    CHECK(conormal_power(c5, 1) == c5);
    CHECK(conormal_power(make_empty(3), 2) == make_empty(9));
    CHECK(normal_power(make_complete(2), 2) == make_complete(4));
    CHECK(normal_power(make_empty(2), 2) == make_empty(4));
    CHECK_THROWS_AS(conormal_power(make_complete(10), 5), CapExceeded);
    CHECK_THROWS_AS(normal_power(make_complete(10), 5), CapExceeded);
    CHECK_THROWS_AS(or_product(make_complete(70), make_complete(70)), CapExceeded);
    CHECK_THROWS_AS(conormal_power(make_complete(3), 0), InputError);

    // complement of the normal square equals the conormal square of the
    // complement, as labeled graphs, for every graph with n <= 5
    for (int n = 2; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask >> bit & 1) g.add_edge(u, v);
            CHECK(complement(normal_power(g, 2)) == conormal_power(complement(g), 2));
        }
    }
}

TEST_CASE("or product") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = test::random_graph(rng, 2 + int(rng() % 4));
        CHECK(or_product(g, g) == conormal_power(g, 2));
    }
    Graph p = or_product(make_complete(2), make_empty(2));
    Graph expect(4);
    expect.add_edge(0, 2);
    expect.add_edge(0, 3);
    expect.add_edge(1, 2);
    expect.add_edge(1, 3);
    CHECK(p == expect);
    Graph g = make_cycle(5);
    CHECK(or_product(make_empty(1), g) == g);
}

TEST_CASE("line graphs") {
    CHECK(line_graph(make_star(3)).graph == make_complete(3));
    CHECK(line_graph(make_path(4)).graph == make_path(3));
    Graph lf51 = line_graph(make_fig51()).graph;
    CHECK(lf51.vertex_count() == 9);
    CHECK(is_k_regular(lf51, 4));
    CHECK_THROWS_AS(line_graph(make_empty(3)), InputError);

    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = test::random_graph(rng, 2 + int(rng() % 7));
        if (g.edge_count() == 0) continue;
        auto lg = line_graph(g);
        CHECK(lg.graph.vertex_count() == g.edge_count());
        for (std::size_t i = 0; i < lg.edge_of_vertex.size(); ++i) {
            auto [u, v] = lg.edge_of_vertex[i];
            CHECK(lg.graph.degree(int(i)) == g.degree(u) + g.degree(v) - 2);
        }
    }
}

TEST_CASE("maximal independent sets") {
    auto c5 = maximal_independent_sets(make_cycle(5));
    CHECK(c5.size() == 5);
    for (const auto& s : c5) CHECK(s.count() == 2);

    auto k4 = maximal_independent_sets(make_complete(4));
    CHECK(k4.size() == 4);
    for (const auto& s : k4) CHECK(s.count() == 1);

    auto e3 = maximal_independent_sets(make_empty(3));
    REQUIRE(e3.size() == 1);
    CHECK(e3[0].count() == 3);

    CHECK_THROWS_AS(maximal_independent_sets(make_empty(40), 30), CapExceeded);

    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 2 + int(rng() % 9);
        Graph g = test::random_graph(rng, n);
        auto sets = maximal_independent_sets(g);
        CHECK(std::is_sorted(sets.begin(), sets.end(),
                             [](const Bitset& a, const Bitset& b) { return a < b; }));
        // pairwise incomparable
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = 0; j < sets.size(); ++j)
                if (i != j) CHECK(!sets[i].is_subset_of(sets[j]));
        // every independent set extends to some listed one
        for (auto is : test::all_independent_sets(g)) {
            bool extends = false;
            for (const auto& s : sets)
                if ((is & ~s.mask64()) == 0) extends = true;
            CHECK(extends);
        }
    }
}

TEST_CASE("max weight independent set") {
    auto c5 = max_weight_independent_set(make_cycle(5), {1, 1, 1, 1, 1});
    CHECK(c5.weight == doctest::Approx(2.0));
    auto k3 = max_weight_independent_set(make_complete(3), {3, 1, 2});
    CHECK(k3.weight == doctest::Approx(3.0));
    CHECK(k3.set.mask64() == 0b001);
    auto c4 = max_weight_independent_set(make_cycle(4), {1, -1, 1, -1});
    CHECK(c4.weight == doctest::Approx(2.0));
    CHECK(c4.set.mask64() == 0b0101);

    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 2 + int(rng() % 9);
        Graph g = test::random_graph(rng, n);
        std::vector<double> w(n);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        for (auto& x : w) x = unif(rng);
        auto got = max_weight_independent_set(g, w);
        double best = 0.0;
        for (const auto& s : maximal_independent_sets(g)) {
            double sum = 0.0;
            s.for_each([&](int v) { sum += std::max(w[v], 0.0); });
            best = std::max(best, sum);
        }
        CHECK(got.weight == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("bipartition and matching") {
    auto c4 = bipartition(make_cycle(4));
    REQUIRE(c4.has_value());
    CHECK(c4->part_a.mask64() == 0b0101);
    CHECK(c4->part_b.mask64() == 0b1010);
    CHECK(!bipartition(make_cycle(5)).has_value());
    auto e3 = bipartition(make_empty(3));
    REQUIRE(e3.has_value());
    CHECK(e3->part_a.count() == 3);

    CHECK(has_perfect_matching_bipartite(make_cycle(6)));
    CHECK(!has_perfect_matching_bipartite(make_star(3)));
    CHECK(has_perfect_matching_bipartite(make_complete_multipartite({3, 3})));
    CHECK_THROWS_AS(has_perfect_matching_bipartite(make_cycle(5)), InputError);

    auto star = bipartition(make_star(3));
    auto violator = hall_violator(make_star(3), *star);
    REQUIRE(violator.has_value());
    CHECK(violator->count() == 3); // the three leaves
    CHECK(!violator->test(0));
    // deficiency: the joint neighborhood is smaller than the set itself
    Bitset nbhd(4);
    violator->for_each([&](int v) { nbhd = nbhd | make_star(3).neighbors(v); });
    CHECK(nbhd.count() < violator->count());
    CHECK(!hall_violator(make_cycle(6), *bipartition(make_cycle(6))).has_value());
}

TEST_CASE("cuts bridges components") {
    Bitset u(5);
    u.set(0);
    u.set(1);
    u.set(2);
    CHECK(boundary_size(make_cycle(5), u) == 2);
    Bitset t(4);
    t.set(0);
    t.set(1);
    t.set(2);
    CHECK(induced_edge_count(make_complete(4), t) == 3);
    CHECK(bridges(make_cycle(5)).empty());
    CHECK(bridges(make_path(4)).size() == 3);

    Graph two(10);
    for (int i = 0; i < 4; ++i) two.add_edge(i, (i + 1) % 4);
    for (int i = 0; i < 6; ++i) two.add_edge(4 + i, 4 + (i + 1) % 6);
    auto comps = components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].count() == 4);
    CHECK(comps[1].count() == 6);
}

TEST_CASE("induced subgraph keeps adjacency") {
    Graph g = make_petersen();
    Bitset s(10);
    for (int v : {0, 1, 2, 5, 7}) s.set(v);
    std::vector<int> verts;
    Graph sub = induced_subgraph(g, s, &verts);
    REQUIRE(sub.vertex_count() == 5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            CHECK(sub.has_edge(i, j) == g.has_edge(verts[i], verts[j]));
}
