#include "gent/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "gent/coloring.hpp"
#include "gent/errors.hpp"
#include "gent/fractional.hpp"

namespace gent {

namespace {

double numeric_gap(const Graph& g, double tol, const SolverConfig& cfg) {
    SolverConfig inner = cfg;
    inner.tol_bits = tol / 4.0;
    double target = std::log2(fractional_chromatic_number(g, cfg.is_cap, cfg.lp_cap).value.get_d());
    double at_uniform = entropy_fw(g, Distribution::uniform(g.vertex_count()), inner).value_bits;
    return target - at_uniform;
}

} // namespace

SymmetryVerdict check_bipartite_symmetric(const Graph& g, double tol, const SolverConfig& cfg) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) throw InputError("bipartite symmetry check: isolated vertex");
    auto parts = bipartition(g);
    if (!parts) throw InputError("bipartite symmetry check: graph is not bipartite");
    SymmetryVerdict verdict;
    verdict.criterion = "bipartite-matching";
    auto matching = bipartite_max_matching(g, *parts);
    if (int(matching.size()) * 2 == g.vertex_count()) {
        verdict.symmetric = Symmetric::Yes;
        verdict.matching = matching;
    } else {
        verdict.symmetric = Symmetric::No;
        verdict.hall_violator_set = hall_violator(g, *parts);
    }
    verdict.numeric_gap_bits = numeric_gap(g, tol, cfg);
    return verdict;
}

// ---------------------------------------------------------------------------
// Perfection
// ---------------------------------------------------------------------------

namespace {

// chordless cycle test: S induces a connected 2-regular subgraph
bool induces_hole(const std::vector<std::uint64_t>& adj, std::uint64_t s) {
    int size = std::popcount(s);
    for (std::uint64_t m = s; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (std::popcount(adj[v] & s) != 2) return false;
    }
    // connectivity walk
    std::uint64_t first = s & (~s + 1);
    std::uint64_t seen = first;
    std::uint64_t frontier = first;
    while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        std::uint64_t next = adj[v] & s & ~seen;
        seen |= next;
        frontier |= next;
    }
    return std::popcount(seen) == size;
}

} // namespace

std::optional<Bitset> find_odd_hole(const Graph& g, int cap) {
    int n = g.vertex_count();
    if (n > cap) throw CapExceeded("odd-hole search needs n <= " + std::to_string(cap));
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).mask64();
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
        int k = std::popcount(s);
        if (k < 5 || k % 2 == 0) continue;
        if (induces_hole(adj, s)) return Bitset::from_mask(n, s);
    }
    return std::nullopt;
}

namespace {

bool has_odd_hole(const Graph& g) { return find_odd_hole(g).has_value(); }

} // namespace

bool is_perfect(const Graph& g, int def_cap, int hole_cap) {
    int n = g.vertex_count();
    if (n <= def_cap) {
        // definition: chi equals omega on every induced subgraph
        for (std::uint64_t s = 1; s < (std::uint64_t(1) << n); ++s) {
            Graph sub = induced_subgraph(g, Bitset::from_mask(n, s));
            if (chromatic_number(sub).chi != clique_number(sub)) return false;
        }
        return true;
    }
    if (n <= hole_cap) return !has_odd_hole(g) && !has_odd_hole(complement(g));
    throw CapExceeded("perfection test needs n <= " + std::to_string(hole_cap) + ", got " +
                      std::to_string(n));
}

// ---------------------------------------------------------------------------
// Clique partitions
// ---------------------------------------------------------------------------

namespace {

// all cliques of size k containing the lowest uncovered vertex
void cliques_of_size_through(const std::vector<std::uint64_t>& adj, std::uint64_t allowed,
                             std::uint64_t current, std::uint64_t common, int need,
                             std::vector<std::uint64_t>& out) {
    if (need == 0) {
        out.push_back(current);
        return;
    }
    std::uint64_t cand = common & allowed;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        std::uint64_t bit = std::uint64_t(1) << v;
        // keep candidate order increasing to avoid duplicates
        cliques_of_size_through(adj, allowed & ~(bit - 1) & ~bit, current | bit,
                                common & adj[v], need - 1, out);
    }
}

bool partition_rec(const std::vector<std::uint64_t>& adj, std::uint64_t remaining, int omega,
                   std::vector<std::uint64_t>& acc) {
    if (remaining == 0) return true;
    int v = std::countr_zero(remaining);
    std::uint64_t bit = std::uint64_t(1) << v;
    std::vector<std::uint64_t> cliques;
    cliques_of_size_through(adj, remaining & ~bit, bit, adj[v] & remaining, omega - 1, cliques);
    for (auto c : cliques) {
        acc.push_back(c);
        if (partition_rec(adj, remaining & ~c, omega, acc)) return true;
        acc.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<Bitset>> max_clique_partition(const Graph& g, int cap) {
    int n = g.vertex_count();
    if (n > cap)
        throw CapExceeded("clique partition needs n <= " + std::to_string(cap) + ", got " +
                          std::to_string(n));
    int omega = clique_number(g, cap);
    if (omega == 0) return std::nullopt;
    if (n % omega != 0) return std::nullopt;
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).mask64();
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    std::vector<std::uint64_t> acc;
    if (!partition_rec(adj, all, omega, acc)) return std::nullopt;
    std::vector<Bitset> out;
    for (auto m : acc) out.push_back(Bitset::from_mask(n, m));
    return out;
}

namespace {

// is every vertex inside some maximum clique? (non-disjoint cover)
bool covered_by_max_cliques(const Graph& g, int omega, int cap) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).mask64();
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    for (int v = 0; v < n; ++v) {
        std::uint64_t bit = std::uint64_t(1) << v;
        std::vector<std::uint64_t> cliques;
        cliques_of_size_through(adj, all & ~bit, bit, adj[v], omega - 1, cliques);
        if (cliques.empty()) return false;
    }
    (void)cap;
    return true;
}

} // namespace

SymmetryVerdict check_perfect_symmetric(const Graph& g, double tol, const SolverConfig& cfg) {
    if (!is_perfect(g)) throw InputError("perfect symmetry check: input graph is not perfect");
    int n = g.vertex_count();
    SymmetryVerdict verdict;
    verdict.criterion = "perfect-clique-partition";
    auto partition = max_clique_partition(g);
    if (partition) {
        verdict.symmetric = Symmetric::Yes;
        verdict.clique_partition = *partition;
    } else {
        verdict.symmetric = Symmetric::No;
        int omega = clique_number(g);
        // a maximum independent set; no partition forces |S| > n/omega
        std::vector<double> unit(n, 1.0);
        Bitset s = max_weight_independent_set(g, unit, kDefaultCliquePartitionCap).set;
        verdict.independent_set = s;
        if (s.count() * omega <= n)
            throw std::logic_error("perfect graph without clique partition but alpha <= n/omega");
        verdict.ambiguous_cover = covered_by_max_cliques(g, omega, kDefaultCliquePartitionCap);
    }
    verdict.numeric_gap_bits = numeric_gap(g, tol, cfg);
    return verdict;
}

SymmetryVerdict check_line_graph_symmetric(const Graph& g1, double tol, const SolverConfig& cfg) {
    if (g1.vertex_count() == 0) throw InputError("line-graph symmetry check: empty graph");
    int k = g1.degree(0);
    if (!is_k_regular(g1, k)) throw InputError("line-graph symmetry check: graph is not regular");
    if (k < 3) throw InputError("line-graph symmetry check: needs k >= 3");
    SymmetryVerdict verdict;
    verdict.criterion = "k-graph-line";
    auto check = is_k_graph(g1, k);
    if (check.holds) {
        verdict.symmetric = Symmetric::Yes;
        // the KKT point certifying uniform optimality on L(g1)
        verdict.kkt_point = std::vector<double>(g1.edge_count(), 1.0 / k);
    } else {
        verdict.symmetric = Symmetric::No;
        verdict.odd_set = check.violating_set;
    }
    verdict.numeric_gap_bits = numeric_gap(line_graph(g1).graph, tol, cfg);
    return verdict;
}

SymmetryVerdict numeric_symmetry_check(const Graph& g, double tol, const SolverConfig& cfg) {
    SymmetryVerdict verdict;
    verdict.criterion = "numeric-only";
    verdict.numeric_gap_bits = numeric_gap(g, tol, cfg);
    verdict.symmetric = verdict.numeric_gap_bits <= tol ? Symmetric::Yes : Symmetric::No;
    return verdict;
}

} // namespace gent
