#ifndef GENT_FRACTIONAL_HPP
#define GENT_FRACTIONAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "gent/graph.hpp"
#include "gent/lp.hpp"

namespace gent {

struct FractionalChromatic {
    Rational value;
    // feasible fractional cover: weight per maximal independent set
    std::vector<std::pair<Bitset, Rational>> weights;
};

/// Exact fractional chromatic number via the covering LP over maximal
/// independent sets.
FractionalChromatic fractional_chromatic_number(const Graph& g,
                                                int enum_cap = kDefaultEnumCap,
                                                int lp_cap = kDefaultLpColumnCap);

inline constexpr int kDefaultOddSetCap = 22;

/// Exact fractional edge-chromatic number: the larger of the maximum degree
/// and max |E[U]| / floor(|U|/2) over odd vertex subsets U with |U| >= 3.
Rational fractional_edge_chromatic(const Graph& g, int cap = kDefaultOddSetCap);

struct PolytopeCheck {
    bool member;
    std::optional<Bitset> violating_set;  // odd-set constraint violations
    std::optional<int> violating_vertex;  // degree constraint violations
    std::optional<int> negative_edge;     // nonnegativity violations
};

/// Membership of an edge vector in the matching polytope, by direct
/// enumeration of the odd-set constraints. `x` is indexed like g.edges().
PolytopeCheck matching_polytope_member(const Graph& g, const std::vector<Rational>& x,
                                       int cap = kDefaultOddSetCap);

struct KGraphCheck {
    bool holds;
    std::optional<Bitset> violating_set; // odd U with |delta(U)| < k
};

/// k-regular g has fractional edge-chromatic number exactly k iff every odd
/// vertex subset has boundary at least k.
KGraphCheck is_k_graph(const Graph& g, int k, int cap = kDefaultOddSetCap);

} // namespace gent

#endif
