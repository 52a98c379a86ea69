#include "gent/fractional.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "gent/errors.hpp"

namespace gent {

FractionalChromatic fractional_chromatic_number(const Graph& g, int enum_cap, int lp_cap) {
    auto sets = maximal_independent_sets(g, enum_cap);
    LpProblem lp;
    for (std::size_t j = 0; j < sets.size(); ++j) lp.add_variable(Rational(1));
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::pair<int, Rational>> row;
        for (std::size_t j = 0; j < sets.size(); ++j)
            if (sets[j].test(v)) row.emplace_back(int(j), Rational(1));
        lp.add_row(std::move(row), Sense::GreaterEq, Rational(1));
    }
    auto sol = lp_solve(lp, lp_cap);
    if (sol.status != LpStatus::Optimal)
        throw InputError("fractional chromatic LP did not solve"); // cannot happen: always feasible
    FractionalChromatic out;
    out.value = sol.objective;
    for (std::size_t j = 0; j < sets.size(); ++j)
        if (sol.x[j] != 0) out.weights.emplace_back(sets[j], sol.x[j]);
    return out;
}

namespace {

void check_odd_set_cap(const Graph& g, int cap, const char* what) {
    if (g.vertex_count() > cap)
        throw CapExceeded(std::string(what) + " needs n <= " + std::to_string(cap) + ", got " +
                          std::to_string(g.vertex_count()));
}

} // namespace

Rational fractional_edge_chromatic(const Graph& g, int cap) {
    check_odd_set_cap(g, cap, "fractional edge-chromatic");
    int n = g.vertex_count();
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).mask64();
    Rational best(g.max_degree());
    for (std::uint64_t u = 0; u < (std::uint64_t(1) << n); ++u) {
        int size = std::popcount(u);
        if (size < 3 || size % 2 == 0) continue;
        long twice = 0;
        for (std::uint64_t m = u; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            twice += std::popcount(adj[v] & u);
        }
        Rational ratio(twice / 2, size / 2);
        ratio.canonicalize();
        if (ratio > best) best = ratio;
    }
    return best;
}

PolytopeCheck matching_polytope_member(const Graph& g, const std::vector<Rational>& x, int cap) {
    check_odd_set_cap(g, cap, "matching polytope membership");
    auto edges = g.edges();
    if (x.size() != edges.size()) throw InputError("edge vector length mismatch");
    int n = g.vertex_count();
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (x[e] < 0) return {false, std::nullopt, std::nullopt, int(e)};
    for (int v = 0; v < n; ++v) {
        Rational deg(0);
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e].first == v || edges[e].second == v) deg += x[e];
        if (deg > 1) return {false, std::nullopt, v, std::nullopt};
    }
    for (std::uint64_t u = 0; u < (std::uint64_t(1) << n); ++u) {
        int size = std::popcount(u);
        if (size < 3 || size % 2 == 0) continue;
        Rational inside(0);
        for (std::size_t e = 0; e < edges.size(); ++e)
            if ((u >> edges[e].first & 1) && (u >> edges[e].second & 1)) inside += x[e];
        if (inside > size / 2)
            return {false, Bitset::from_mask(n, u), std::nullopt, std::nullopt};
    }
    return {true, std::nullopt, std::nullopt, std::nullopt};
}

KGraphCheck is_k_graph(const Graph& g, int k, int cap) {
    check_odd_set_cap(g, cap, "k-graph check");
    if (!is_k_regular(g, k))
        throw InputError("is_k_graph needs a " + std::to_string(k) + "-regular graph");
    int n = g.vertex_count();
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).mask64();
    for (std::uint64_t u = 1; u < (std::uint64_t(1) << n); ++u) {
        if (std::popcount(u) % 2 == 0) continue;
        int cut = 0;
        for (std::uint64_t m = u; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            cut += std::popcount(adj[v] & ~u);
        }
        if (cut < k) return {false, Bitset::from_mask(n, u)};
    }
    return {true, std::nullopt};
}

} // namespace gent
