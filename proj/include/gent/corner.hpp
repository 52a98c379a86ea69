#ifndef GENT_CORNER_HPP
#define GENT_CORNER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gent/graph.hpp"
#include "gent/prob.hpp"

namespace gent {

enum class CornerKind { UnitCorner, VertexPacking, FractionalVertexPacking };

/// Symbolic convex corner: the unit corner S, VP(G), or FVP(G). Exposes
/// membership and a linear-maximization oracle over its vertices.
struct ConvexCorner {
    CornerKind kind;
    int dim;
    std::optional<Graph> graph; // set for the two graph kinds

    static ConvexCorner unit(int n);
    static ConvexCorner vertex_packing(Graph g);
    static ConvexCorner fractional_vertex_packing(Graph g);
};

struct SolverConfig {
    double tol_bits = 1e-7;
    long max_iterations = 100000;
    int is_cap = kDefaultEnumCap;
    int lp_cap = 500;
};

struct EntropyResult {
    double value_bits = 0.0;
    std::vector<double> minimizer;
    long iterations = 0;
    double gap_bits = 0.0; // certified linearization gap
    std::string method;
    bool suspect = false; // log floor was hit on a support coordinate
    // convex-combination weights over independent sets (FW active set / AM r)
    std::vector<std::pair<Bitset, double>> weights;
};

/// Iteration budget exhausted; carries the best iterate found so far.
struct NonConvergence : std::runtime_error {
    NonConvergence(const std::string& msg, EntropyResult best_so_far)
        : std::runtime_error(msg), best(std::move(best_so_far)) {}
    EntropyResult best;
};

/// Vertex of the corner maximizing w'x; ties resolved deterministically.
std::vector<double> linear_maximize(const ConvexCorner& c, const std::vector<double>& w,
                                    const SolverConfig& cfg = {});

/// Membership up to a feasibility slack (exact LP decision on x - slack).
bool corner_contains(const ConvexCorner& c, const std::vector<double>& x, double slack = 1e-9,
                     const SolverConfig& cfg = {});

/// H_A(P) = min over a in the corner of sum p_i log2(1/a_i).
EntropyResult corner_entropy(const ConvexCorner& c, const Distribution& p,
                             const SolverConfig& cfg = {});

/// Graph entropy by Frank-Wolfe over VP(G) with the max-weight
/// independent-set oracle.
EntropyResult entropy_fw(const Graph& g, const Distribution& p, const SolverConfig& cfg = {});

/// Graph entropy by alternating minimization of I(X;Y) over joint
/// distributions of a vertex and an independent set containing it.
EntropyResult entropy_am(const Graph& g, const Distribution& p, const SolverConfig& cfg = {});

/// Alternating-minimization state at an iterate: the set marginal r(F) and
/// the conditionals q(F|i), zero whenever i is outside F; each row with
/// p_i > 0 sums to one.
struct AmState {
    std::vector<Bitset> sets;
    std::vector<double> r;
    std::vector<std::vector<double>> q_cond; // indexed [vertex][set]
};

/// Reconstruct the AM state from an entropy_am result.
AmState am_state(const Graph& g, const Distribution& p, const EntropyResult& am_result);

struct MaxEntropyResult {
    std::vector<double> maximizer;
    double value_bits;
    long iterations;
    double certificate_gap_bits; // |log2 chi_f - value|
};

/// Concave maximization of P -> H_k(G,P) by entropic mirror ascent; the
/// exact fractional chromatic number certifies the optimum.
MaxEntropyResult max_entropy_distribution(const Graph& g, double tol_bits = 1e-4,
                                          const SolverConfig& inner = {},
                                          long outer_budget = 5000);

/// H_k(G,P) + H_k(complement(G),P) - H(P); zero for all P iff G is perfect.
double splitting_gap(const Graph& g, const Distribution& p, const SolverConfig& cfg = {});

/// Checks H(p) = H_VP(G)(p) + H_FVP(complement(G))(p) within tol.
bool antiblocker_identity_check(const Graph& g, const Distribution& p, double tol_bits = 1e-5,
                                const SolverConfig& cfg = {});

} // namespace gent

#endif
