#ifndef GENT_SYMMETRY_HPP
#define GENT_SYMMETRY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gent/corner.hpp"
#include "gent/graph.hpp"

namespace gent {

enum class Symmetric { Yes, No, Unknown };

/// Decision about whether the uniform distribution maximizes H_k(G,P),
/// with a criterion-specific certificate and the numeric gap
/// log2 chi_f(G) - H_k(G,U).
struct SymmetryVerdict {
    Symmetric symmetric = Symmetric::Unknown;
    std::string criterion; // bipartite-matching | perfect-clique-partition |
                           // k-graph-line | numeric-only
    std::optional<std::vector<std::pair<int, int>>> matching;
    std::optional<Bitset> hall_violator_set;
    std::optional<std::vector<Bitset>> clique_partition;
    std::optional<Bitset> independent_set; // |S| > n/omega witness
    std::optional<Bitset> odd_set;         // |delta(U)| < k witness
    std::optional<std::vector<double>> kkt_point;
    double numeric_gap_bits = 0.0;
    bool ambiguous_cover = false; // non-disjoint max-clique cover exists but
                                  // no partition does
};

inline constexpr double kDefaultSymmetryTol = 1e-4;

/// Bipartite criterion: symmetric iff a perfect matching exists.
SymmetryVerdict check_bipartite_symmetric(const Graph& g, double tol = kDefaultSymmetryTol,
                                          const SolverConfig& cfg = {});

inline constexpr int kDefaultPerfectDefCap = 12;
inline constexpr int kDefaultPerfectHoleCap = 16;

/// Perfection: definitional check (chi = omega on every induced subgraph)
/// up to def_cap vertices; odd-hole/odd-antihole detection beyond.
bool is_perfect(const Graph& g, int def_cap = kDefaultPerfectDefCap,
                int hole_cap = kDefaultPerfectHoleCap);

/// Smallest-mask induced chordless odd cycle on >= 5 vertices, if any.
std::optional<Bitset> find_odd_hole(const Graph& g, int cap = kDefaultPerfectHoleCap);

inline constexpr int kDefaultCliquePartitionCap = 20;

/// Partition of V into cliques of maximum size, when one exists.
std::optional<std::vector<Bitset>> max_clique_partition(const Graph& g,
                                                        int cap = kDefaultCliquePartitionCap);

/// Perfect-graph criterion: symmetric iff V is covered by maximum cliques.
SymmetryVerdict check_perfect_symmetric(const Graph& g, double tol = kDefaultSymmetryTol,
                                        const SolverConfig& cfg = {});

/// Line-graph criterion: for k-regular g1 (k >= 3), L(g1) is symmetric iff
/// g1 is a k-graph. The verdict is about the line graph.
SymmetryVerdict check_line_graph_symmetric(const Graph& g1, double tol = kDefaultSymmetryTol,
                                           const SolverConfig& cfg = {});

/// Numeric-only decision: symmetric iff log2 chi_f(G) - H_k(G,U) <= tol.
SymmetryVerdict numeric_symmetry_check(const Graph& g, double tol = kDefaultSymmetryTol,
                                       const SolverConfig& cfg = {});

} // namespace gent

#endif
