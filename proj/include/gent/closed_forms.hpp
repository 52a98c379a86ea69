#ifndef GENT_CLOSED_FORMS_HPP
#define GENT_CLOSED_FORMS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "gent/corner.hpp"
#include "gent/graph.hpp"
#include "gent/prob.hpp"

namespace gent {

/// H_k(K_n, P) = H(P).
double entropy_complete(const Distribution& p);

/// Complete multipartite entropy: the entropy of the part-mass vector.
double entropy_complete_multipartite(const std::vector<int>& sizes, const Distribution& p);

struct BipartiteEntropyReport {
    bool condition_holds; // P(D)/P(A) <= P(N(D))/P(B) for all D subsets of A
    double value_bits;
    // blocks (D_i, U_i) when the ratio condition fails
    std::optional<std::vector<std::pair<Bitset, Bitset>>> partition;
    Bitset part_a; // the orientation the condition was tested on
    Bitset part_b;
};

inline constexpr int kDefaultBipartiteCap = 24;

/// Bipartite graph entropy in closed form: h(P(A)) under the neighborhood
/// ratio condition, otherwise the greedy block partition value. Both
/// orientations are evaluated and must agree; the result is cross-validated
/// against the polytope solver.
BipartiteEntropyReport bipartite_entropy(const Graph& g, const Distribution& p,
                                         int cap = kDefaultBipartiteCap,
                                         const SolverConfig& cfg = {});

/// Decompose by connected components, solve each renormalized piece, and
/// recombine: H_k(G,P) = sum_i P(V_i) H_k(G_i, P_i).
double entropy_by_components(const Graph& g, const Distribution& p,
                             const SolverConfig& cfg = {});

} // namespace gent

#endif
