#ifndef GENT_COUNTING_HPP
#define GENT_COUNTING_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "gent/graph.hpp"

namespace gent {

struct ShearerReport {
    long long n, n1, n2, n3;
    bool holds; // n^2 <= n1*n2*n3
};

/// Distinct projection counts of a 3D point set onto the coordinate planes.
ShearerReport shearer_check(const std::vector<std::array<long long, 3>>& points);

inline constexpr int kDefaultPermanentCap = 14;

/// Exact number of perfect matchings of a balanced bipartite graph
/// (permanent of the biadjacency matrix, Ryser's formula).
long long count_perfect_matchings(const Graph& g, int cap = kDefaultPermanentCap);

struct BregmanReport {
    long long count;
    double bound; // prod over one part of (d(v)!)^(1/d(v))
    bool holds;
};

BregmanReport bregman_bound(const Graph& g, int cap = kDefaultPermanentCap);

} // namespace gent

#endif
