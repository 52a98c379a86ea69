#ifndef GENT_COLORING_HPP
#define GENT_COLORING_HPP

#include <vector>

#include "gent/corner.hpp"
#include "gent/graph.hpp"
#include "gent/prob.hpp"

namespace gent {

/// Partition of V(G) into independent color classes.
struct Coloring {
    std::vector<Bitset> classes;
};

bool is_proper_coloring(const Graph& g, const Coloring& c);

/// Grundy property: every vertex of class i has a neighbor in every class j < i.
bool is_grundy_coloring(const Graph& g, const Coloring& c);

/// Class masses sorted nonincreasing.
std::vector<double> color_sequence(const Coloring& c, const Distribution& p);

/// c dominates d: every prefix sum of c is >= the corresponding prefix of d.
bool sequence_dominates(const std::vector<double>& c, const std::vector<double>& d);

struct ChromaticResult {
    int chi;
    Coloring witness;
};

inline constexpr int kDefaultChromaticCap = 64;

/// Exact chromatic number by DSATUR-ordered branch and bound with a greedy
/// clique lower bound.
ChromaticResult chromatic_number(const Graph& g, int cap = kDefaultChromaticCap);

/// Exact maximum clique size (via independent sets of the complement).
int clique_number(const Graph& g, int cap = kDefaultChromaticCap);

struct GrundyResult {
    int gamma;
    Coloring witness;
};

inline constexpr int kDefaultGrundyCap = 12;

/// Exact Grundy number: the longest chain of iteratively removed maximal
/// independent sets, by memoized subset recursion.
GrundyResult grundy_number(const Graph& g, int cap = kDefaultGrundyCap);

struct MinEntropyResult {
    Coloring coloring;
    double entropy_bits;
};

inline constexpr int kDefaultMinEntropyCap = 14;

/// Exact minimum-entropy proper coloring. The search walks ordered maximal
/// independent-set chains (every minimum-entropy coloring is Grundy) and
/// cuts branches whose best-case color sequence is dominated by the
/// incumbent.
MinEntropyResult min_entropy_coloring(const Graph& g, const Distribution& p,
                                      int cap = kDefaultMinEntropyCap);

/// Minimum number of colors among all colorings whose entropy is within
/// 1e-9 of the minimum.
int chi_H(const Graph& g, const Distribution& p, int cap = kDefaultMinEntropyCap);

struct MaxChiH {
    int value;              // Gamma(G)
    bool witness_verified;  // some geometric witness distribution attained it
    std::vector<double> witness; // the verified (or last attempted) distribution
};

/// max over P of chi_H(G,P), equal to the Grundy number; also attempts a
/// geometric witness distribution and verifies it by exact search.
MaxChiH max_chi_H(const Graph& g, int grundy_cap = kDefaultGrundyCap,
                  int coloring_cap = kDefaultMinEntropyCap);

/// H_omega(G,P) = H(P) - H_k(complement(G),P).
double clique_entropy(const Graph& g, const Distribution& p, const SolverConfig& cfg = {});

/// log2(n / alpha(G)), a lower bound on the uniform chromatic entropy.
double chromatic_entropy_lower_bound(const Graph& g, int cap = kDefaultEnumCap);

} // namespace gent

#endif
