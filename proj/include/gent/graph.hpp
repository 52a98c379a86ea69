#ifndef GENT_GRAPH_HPP
#define GENT_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gent/bitset.hpp"

namespace gent {

/// Simple undirected graph on vertices 0..n-1 with one adjacency bitrow per
/// vertex. Symmetry and irreflexivity are enforced on construction; graphs
/// are immutable once built by the factory functions below.
class Graph {
public:
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    long edge_count() const;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj_[u].test(v); }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int max_degree() const;

    /// Edges in lexicographic order (u < v).
    std::vector<std::pair<int, int>> edges() const;

    Bitset full_vertex_set() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_;
    std::vector<Bitset> adj_;
};

struct BipartitionWitness {
    Bitset part_a;
    Bitset part_b;
};

// ---------------------------------------------------------------------------
// DIMACS edge format I/O (`c` comments, `p edge n m`, `e u v`, 1-indexed)
// ---------------------------------------------------------------------------

Graph parse_dimacs(const std::string& text);
std::string to_dimacs(const Graph& g);

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

Graph make_empty(int n);
Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_star(int leaves); // vertex 0 is the hub
Graph make_complete_multipartite(const std::vector<int>& sizes);
Graph make_kneser(int v, int r); // vertices are r-subsets of {0..v-1} in mask order
Graph make_petersen();
Graph make_fig51(); // the 6-vertex bridgeless cubic graph (triangular prism)
Graph make_fig52(); // the 10-vertex cubic graph with a single bridge

/// Dispatch by family name with integer parameters, e.g. ("cycle", {5}).
Graph generate(const std::string& family, const std::vector<int>& params);

// ---------------------------------------------------------------------------
// Graph operations
// ---------------------------------------------------------------------------

Graph complement(const Graph& g);
Graph union_graphs(const Graph& f, const Graph& g);

/// Delete v from g and join every vertex of f to the former neighbors of v.
/// Result vertex order: g's vertices except v (original order), then f's.
Graph substitute(const Graph& g, int v, const Graph& f);

inline constexpr int kDefaultPowerCap = 4096;

/// k-th conormal power: tuples adjacent iff some coordinate pair is an edge.
/// Tuple vertices are row-major flattened.
Graph conormal_power(const Graph& g, int k, int vertex_cap = kDefaultPowerCap);

/// k-th normal power: distinct tuples adjacent iff every coordinate pair is
/// an edge or equal.
Graph normal_power(const Graph& g, int k, int vertex_cap = kDefaultPowerCap);

/// OR product on V1 x V2 (row-major): adjacent iff adjacent in either factor.
Graph or_product(const Graph& g1, const Graph& g2, int vertex_cap = kDefaultPowerCap);

struct LineGraph {
    Graph graph;
    std::vector<std::pair<int, int>> edge_of_vertex; // line-graph vertex -> edge of g
};

/// Line graph; vertices are the edges of g in lexicographic order.
LineGraph line_graph(const Graph& g);

// ---------------------------------------------------------------------------
// Combinatorial subroutines
// ---------------------------------------------------------------------------

inline constexpr int kDefaultEnumCap = 30;

/// All inclusion-maximal independent sets, sorted by bitmask value.
std::vector<Bitset> maximal_independent_sets(const Graph& g, int cap = kDefaultEnumCap);

/// Maximal independent sets of the subgraph induced by `within`, as masks
/// over the original vertex indices, sorted by value. Requires n <= 64.
std::vector<std::uint64_t> maximal_independent_sets_within(const Graph& g, std::uint64_t within,
                                                           int cap = kDefaultEnumCap);

struct WeightedSet {
    Bitset set;
    double weight;
};

/// Exact maximum-weight independent set; vertices with non-positive weight
/// are never included. `candidates`, when given, restricts the search.
WeightedSet max_weight_independent_set(const Graph& g, const std::vector<double>& w,
                                       int cap = kDefaultEnumCap,
                                       const Bitset* candidates = nullptr);

/// BFS 2-coloring; empty when the graph contains an odd cycle.
std::optional<BipartitionWitness> bipartition(const Graph& g);

/// Maximum matching of a bipartite graph by augmenting paths.
std::vector<std::pair<int, int>> bipartite_max_matching(const Graph& g,
                                                        const BipartitionWitness& parts);

bool has_perfect_matching_bipartite(const Graph& g);

/// Hall violator: D inside the smaller part with |D| > |N(D)|, if one exists.
std::optional<Bitset> hall_violator(const Graph& g, const BipartitionWitness& parts);

int boundary_size(const Graph& g, const Bitset& u);   // |delta(U)|
long induced_edge_count(const Graph& g, const Bitset& u); // |E[U]|
std::vector<std::pair<int, int>> bridges(const Graph& g);
bool is_k_regular(const Graph& g, int k);
std::vector<Bitset> components(const Graph& g);

/// Induced subgraph; `vertices` receives the original index of each new vertex.
Graph induced_subgraph(const Graph& g, const Bitset& u, std::vector<int>* vertices = nullptr);

} // namespace gent

#endif
