#include "gent/corner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gent/errors.hpp"
#include "gent/fractional.hpp"
#include "gent/lp.hpp"

namespace gent {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kLogFloor = 1e-300;

} // namespace

ConvexCorner ConvexCorner::unit(int n) {
    if (n < 1) throw InputError("unit corner needs n >= 1");
    return {CornerKind::UnitCorner, n, std::nullopt};
}

ConvexCorner ConvexCorner::vertex_packing(Graph g) {
    int n = g.vertex_count();
    return {CornerKind::VertexPacking, n, std::move(g)};
}

ConvexCorner ConvexCorner::fractional_vertex_packing(Graph g) {
    int n = g.vertex_count();
    return {CornerKind::FractionalVertexPacking, n, std::move(g)};
}

// ---------------------------------------------------------------------------
// Linear maximization oracles
// ---------------------------------------------------------------------------

namespace {

// Maximal cliques of g are the maximal independent sets of its complement.
std::vector<Bitset> maximal_cliques(const Graph& g, int cap) {
    return maximal_independent_sets(complement(g), cap);
}

// Exact LP vertex of FVP(g) maximizing w'x, restricted to `candidates`.
std::vector<double> fvp_oracle(const Graph& g, const std::vector<Bitset>& cliques,
                               const std::vector<double>& w, const Bitset* candidates,
                               int lp_cap) {
    int n = g.vertex_count();
    LpProblem lp;
    std::vector<int> var(n, -1);
    for (int v = 0; v < n; ++v) {
        if (candidates && !candidates->test(v)) continue;
        var[v] = lp.add_variable(-Rational(w[v])); // maximize => minimize negation
    }
    for (const auto& k : cliques) {
        std::vector<std::pair<int, Rational>> row;
        k.for_each([&](int v) {
            if (var[v] >= 0) row.emplace_back(var[v], Rational(1));
        });
        if (!row.empty()) lp.add_row(std::move(row), Sense::LessEq, Rational(1));
    }
    auto sol = lp_solve(lp, lp_cap);
    if (sol.status != LpStatus::Optimal) throw InputError("FVP oracle LP failed");
    std::vector<double> x(n, 0.0);
    for (int v = 0; v < n; ++v)
        if (var[v] >= 0) x[v] = sol.x[var[v]].get_d();
    return x;
}

} // namespace

std::vector<double> linear_maximize(const ConvexCorner& c, const std::vector<double>& w,
                                    const SolverConfig& cfg) {
    if (int(w.size()) != c.dim) throw InputError("oracle weight dimension mismatch");
    switch (c.kind) {
    case CornerKind::UnitCorner: {
        // best unit-corner vertex: e_i of the largest positive weight
        std::vector<double> x(c.dim, 0.0);
        int best = -1;
        for (int i = 0; i < c.dim; ++i)
            if (w[i] > 0.0 && (best == -1 || w[i] > w[best])) best = i;
        if (best >= 0) x[best] = 1.0;
        return x;
    }
    case CornerKind::VertexPacking: {
        auto [set, weight] = max_weight_independent_set(*c.graph, w, cfg.is_cap);
        std::vector<double> x(c.dim, 0.0);
        set.for_each([&](int v) { x[v] = 1.0; });
        return x;
    }
    case CornerKind::FractionalVertexPacking:
        return fvp_oracle(*c.graph, maximal_cliques(*c.graph, cfg.is_cap), w, nullptr,
                          cfg.lp_cap);
    }
    throw InputError("unknown corner kind");
}

bool corner_contains(const ConvexCorner& c, const std::vector<double>& x, double slack,
                     const SolverConfig& cfg) {
    if (int(x.size()) != c.dim) throw InputError("membership dimension mismatch");
    for (double v : x)
        if (v < -slack) return false;
    Rational eps(slack);
    switch (c.kind) {
    case CornerKind::UnitCorner: {
        Rational sum(0);
        for (double v : x) sum += Rational(std::max(v, 0.0));
        return sum <= Rational(1) + eps * c.dim;
    }
    case CornerKind::FractionalVertexPacking: {
        for (const auto& k : maximal_cliques(*c.graph, cfg.is_cap)) {
            Rational sum(0);
            k.for_each([&](int v) { sum += Rational(std::max(x[v], 0.0)); });
            if (sum > Rational(1) + eps * k.count()) return false;
        }
        return true;
    }
    case CornerKind::VertexPacking: {
        // x in VP(G) iff some lambda >= 0 with sum lambda <= 1 dominates x
        // coordinate-wise over the maximal independent sets.
        auto sets = maximal_independent_sets(*c.graph, cfg.is_cap);
        LpProblem lp;
        for (std::size_t j = 0; j < sets.size(); ++j) lp.add_variable(Rational(0));
        std::vector<std::pair<int, Rational>> total;
        for (std::size_t j = 0; j < sets.size(); ++j) total.emplace_back(int(j), Rational(1));
        lp.add_row(total, Sense::LessEq, Rational(1));
        for (int v = 0; v < c.dim; ++v) {
            Rational need = Rational(x[v]) - eps;
            if (need <= 0) continue;
            std::vector<std::pair<int, Rational>> row;
            for (std::size_t j = 0; j < sets.size(); ++j)
                if (sets[j].test(v)) row.emplace_back(int(j), Rational(1));
            lp.add_row(std::move(row), Sense::GreaterEq, need);
        }
        return lp_solve(lp, cfg.lp_cap).status == LpStatus::Optimal;
    }
    }
    throw InputError("unknown corner kind");
}

// ---------------------------------------------------------------------------
// Frank-Wolfe with away steps
// ---------------------------------------------------------------------------

namespace {

struct Active {
    std::vector<std::vector<double>> vertex;
    std::vector<Bitset> key; // independent-set mask when meaningful
    std::vector<double> lambda;

    int find(const std::vector<double>& x) const {
        for (std::size_t i = 0; i < vertex.size(); ++i)
            if (vertex[i] == x) return int(i);
        return -1;
    }

    std::vector<double> combination(int dim) const {
        std::vector<double> a(dim, 0.0);
        for (std::size_t i = 0; i < vertex.size(); ++i)
            for (int j = 0; j < dim; ++j) a[j] += lambda[i] * vertex[i][j];
        return a;
    }

    void prune() {
        double total = 0.0;
        for (std::size_t i = 0; i < lambda.size();) {
            if (lambda[i] <= 1e-16) {
                lambda[i] = lambda.back();
                lambda.pop_back();
                vertex[i] = std::move(vertex.back());
                vertex.pop_back();
                key[i] = std::move(key.back());
                key.pop_back();
            } else {
                total += lambda[i];
                ++i;
            }
        }
        for (auto& l : lambda) l /= total;
    }
};

struct Objective {
    const std::vector<double>& p;
    std::vector<int> support;
    bool* suspect;

    double value(const std::vector<double>& a) const {
        double f = 0.0;
        for (int i : support) {
            double ai = a[i];
            if (ai < kLogFloor) {
                ai = kLogFloor;
                *suspect = true;
            }
            f -= p[i] * std::log2(ai);
        }
        return f;
    }

    // oracle weights p_i / a_i (positive scaling of -grad f)
    std::vector<double> oracle_weights(const std::vector<double>& a) const {
        std::vector<double> w(p.size(), 0.0);
        for (int i : support) w[i] = p[i] / std::max(a[i], kLogFloor);
        return w;
    }

    // <-grad f, d> in bits
    double descent(const std::vector<double>& a, const std::vector<double>& d) const {
        double g = 0.0;
        for (int i : support) g += p[i] * d[i] / (std::max(a[i], kLogFloor) * kLn2);
        return g;
    }

    // exact line search for min f(a + t d) over [0, tmax] by bisection on
    // the monotone derivative; resolution 1e-12
    double line_search(const std::vector<double>& a, const std::vector<double>& d,
                       double tmax) const {
        auto deriv = [&](double t) {
            double s = 0.0;
            for (int i : support) {
                double ai = a[i] + t * d[i];
                s -= p[i] * d[i] / (std::max(ai, kLogFloor) * kLn2);
            }
            return s;
        };
        if (deriv(tmax) <= 0.0) return tmax;
        double lo = 0.0, hi = tmax;
        while (hi - lo > 1e-12) {
            double mid = 0.5 * (lo + hi);
            (deriv(mid) <= 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }
};

// Oracle returning a corner vertex maximizing w'x plus an identifying mask
// (empty/unused in the LP case).
struct VertexOracle {
    const Graph* graph = nullptr;
    const ConvexCorner* corner = nullptr;
    std::vector<Bitset> cliques; // FVP only
    Bitset candidates;           // support restriction
    const SolverConfig* cfg;

    std::pair<std::vector<double>, Bitset> operator()(const std::vector<double>& w) const {
        int n = int(w.size());
        if (corner->kind == CornerKind::VertexPacking) {
            auto [set, weight] = max_weight_independent_set(*graph, w, cfg->is_cap, &candidates);
            std::vector<double> x(n, 0.0);
            set.for_each([&](int v) { x[v] = 1.0; });
            return {std::move(x), set};
        }
        auto x = fvp_oracle(*graph, cliques, w, &candidates, cfg->lp_cap);
        return {std::move(x), Bitset(n)};
    }
};

EntropyResult run_frank_wolfe(const ConvexCorner& corner, const Distribution& p,
                              const SolverConfig& cfg, const std::string& method) {
    const Graph& g = *corner.graph;
    int n = corner.dim;
    bool suspect = false;
    Objective obj{p.values(), {}, &suspect};
    Bitset support(n);
    for (int i = 0; i < n; ++i)
        if (p[i] > 0.0) {
            obj.support.push_back(i);
            support.set(i);
        }

    VertexOracle oracle{&g, &corner, {}, support, &cfg};
    if (corner.kind == CornerKind::FractionalVertexPacking)
        oracle.cliques = maximal_cliques(g, cfg.is_cap);

    // start from the average of the maximal independent sets of the support
    // subgraph: strictly positive on every support coordinate
    std::vector<int> sub_vertices;
    Graph sub = induced_subgraph(g, support, &sub_vertices);
    auto sub_sets = maximal_independent_sets(sub, cfg.is_cap);
    Active active;
    for (const auto& s : sub_sets) {
        Bitset lifted(n);
        s.for_each([&](int v) { lifted.set(sub_vertices[v]); });
        std::vector<double> x(n, 0.0);
        lifted.for_each([&](int v) { x[v] = 1.0; });
        active.vertex.push_back(std::move(x));
        active.key.push_back(lifted);
        active.lambda.push_back(1.0 / double(sub_sets.size()));
    }
    std::vector<double> a = active.combination(n);

    auto finish = [&](long iters, double gap) {
        EntropyResult r;
        r.value_bits = obj.value(a);
        r.minimizer = a;
        r.iterations = iters;
        r.gap_bits = std::max(gap, 0.0);
        r.method = method;
        r.suspect = suspect;
        for (std::size_t i = 0; i < active.vertex.size(); ++i)
            r.weights.emplace_back(active.key[i], active.lambda[i]);
        return r;
    };

    double gap = std::numeric_limits<double>::infinity();
    for (long it = 0; it < cfg.max_iterations; ++it) {
        auto w = obj.oracle_weights(a);
        auto [s, skey] = oracle(w);
        std::vector<double> d_fw(n);
        for (int i = 0; i < n; ++i) d_fw[i] = s[i] - a[i];
        gap = obj.descent(a, d_fw);
        if (gap <= cfg.tol_bits) return finish(it, gap);

        // away vertex: active atom with the least oracle weight
        int away = -1;
        double away_score = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < active.vertex.size(); ++i) {
            double score = 0.0;
            for (int j : obj.support) score += w[j] * active.vertex[i][j];
            if (score < away_score) {
                away_score = score;
                away = int(i);
            }
        }

        bool use_away = false;
        std::vector<double> d_aw(n, 0.0);
        double g_aw = -1.0;
        if (away >= 0 && active.lambda[away] < 1.0) {
            for (int i = 0; i < n; ++i) d_aw[i] = a[i] - active.vertex[away][i];
            g_aw = obj.descent(a, d_aw);
            use_away = g_aw > gap;
        }

        if (use_away) {
            double tmax = active.lambda[away] / (1.0 - active.lambda[away]);
            double t = obj.line_search(a, d_aw, tmax);
            for (auto& l : active.lambda) l *= 1.0 + t;
            active.lambda[away] -= t;
            for (int i = 0; i < n; ++i) a[i] += t * d_aw[i];
        } else {
            double t = obj.line_search(a, d_fw, 1.0);
            for (auto& l : active.lambda) l *= 1.0 - t;
            int idx = active.find(s);
            if (idx == -1) {
                active.vertex.push_back(s);
                active.key.push_back(skey);
                active.lambda.push_back(t);
            } else {
                active.lambda[idx] += t;
            }
            for (int i = 0; i < n; ++i) a[i] += t * d_fw[i];
        }
        active.prune();
        if ((it & 63) == 63) a = active.combination(n); // curb drift
    }
    throw NonConvergence("Frank-Wolfe iteration budget exhausted (gap " + std::to_string(gap) +
                             " bits)",
                         finish(cfg.max_iterations, gap));
}

} // namespace

EntropyResult corner_entropy(const ConvexCorner& c, const Distribution& p,
                             const SolverConfig& cfg) {
    if (p.size() != c.dim) throw InputError("corner and distribution dimensions differ");
    if (!(cfg.tol_bits > 0.0)) throw InputError("tolerance must be positive");
    if (c.kind == CornerKind::UnitCorner) {
        EntropyResult r;
        r.value_bits = entropy(p);
        r.minimizer = p.values();
        r.method = "closed-form";
        return r;
    }
    return run_frank_wolfe(c, p, cfg,
                           c.kind == CornerKind::VertexPacking ? "fw" : "fw-fvp");
}

EntropyResult entropy_fw(const Graph& g, const Distribution& p, const SolverConfig& cfg) {
    return corner_entropy(ConvexCorner::vertex_packing(g), p, cfg);
}

// ---------------------------------------------------------------------------
// Alternating minimization
// ---------------------------------------------------------------------------

EntropyResult entropy_am(const Graph& g, const Distribution& p, const SolverConfig& cfg) {
    if (p.size() != g.vertex_count()) throw InputError("graph and distribution sizes differ");
    if (!(cfg.tol_bits > 0.0)) throw InputError("tolerance must be positive");
    int n = g.vertex_count();
    bool suspect = false;
    Objective obj{p.values(), {}, &suspect};
    Bitset support(n);
    for (int i = 0; i < n; ++i)
        if (p[i] > 0.0) {
            obj.support.push_back(i);
            support.set(i);
        }

    std::vector<int> sub_vertices;
    Graph sub = induced_subgraph(g, support, &sub_vertices);
    auto sub_sets = maximal_independent_sets(sub, cfg.is_cap);
    std::vector<Bitset> sets;
    for (const auto& s : sub_sets) {
        Bitset lifted(n);
        s.for_each([&](int v) { lifted.set(sub_vertices[v]); });
        sets.push_back(lifted);
    }
    std::size_t m = sets.size();
    std::vector<double> r(m, 1.0 / double(m));

    auto point_of = [&](const std::vector<double>& rr) {
        std::vector<double> a(n, 0.0);
        for (std::size_t f = 0; f < m; ++f)
            sets[f].for_each([&](int v) { a[v] += rr[f]; });
        return a;
    };

    auto finish = [&](const std::vector<double>& a, long iters, double gap) {
        EntropyResult res;
        res.value_bits = obj.value(a);
        res.minimizer = a;
        res.iterations = iters;
        res.gap_bits = std::max(gap, 0.0);
        res.method = "am";
        res.suspect = suspect;
        for (std::size_t f = 0; f < m; ++f) res.weights.emplace_back(sets[f], r[f]);
        return res;
    };

    auto certified_gap = [&](const std::vector<double>& a) {
        auto w = obj.oracle_weights(a);
        auto [set, weight] = max_weight_independent_set(g, w, cfg.is_cap, &support);
        std::vector<double> d(n, 0.0);
        set.for_each([&](int v) { d[v] = 1.0; });
        for (int i = 0; i < n; ++i) d[i] -= a[i];
        return obj.descent(a, d);
    };

    std::vector<double> a = point_of(r);
    double value = obj.value(a);
    double diff_tol = cfg.tol_bits;
    double gap = std::numeric_limits<double>::infinity();
    for (long it = 0; it < cfg.max_iterations; ++it) {
        // q(F|i) = r(F)/a_i for i in F, then r(F) <- sum_i p_i q(F|i);
        // folding q out gives r(F) <- r(F) * sum_{i in F} p_i / a_i
        std::vector<double> next(m, 0.0);
        double total = 0.0;
        for (std::size_t f = 0; f < m; ++f) {
            double scale = 0.0;
            sets[f].for_each([&](int v) {
                if (p[v] > 0.0) scale += p[v] / std::max(a[v], kLogFloor);
            });
            next[f] = r[f] * scale;
            total += next[f];
        }
        for (auto& x : next) x /= total;
        r = std::move(next);
        a = point_of(r);
        double new_value = obj.value(a);
        if (value - new_value <= diff_tol) {
            gap = certified_gap(a);
            if (gap <= cfg.tol_bits) return finish(a, it + 1, gap);
            diff_tol *= 0.25; // successive values stalled before the gap closed
        }
        value = new_value;
    }
    throw NonConvergence("alternating minimization budget exhausted", finish(a, cfg.max_iterations, gap));
}

AmState am_state(const Graph& g, const Distribution& p, const EntropyResult& am_result) {
    int n = g.vertex_count();
    AmState state;
    for (const auto& [set, weight] : am_result.weights) {
        state.sets.push_back(set);
        state.r.push_back(weight);
    }
    std::vector<double> a(n, 0.0);
    for (std::size_t f = 0; f < state.sets.size(); ++f)
        state.sets[f].for_each([&](int v) { a[v] += state.r[f]; });
    state.q_cond.assign(n, std::vector<double>(state.sets.size(), 0.0));
    for (int i = 0; i < n; ++i) {
        if (p[i] <= 0.0 || a[i] <= 0.0) continue;
        for (std::size_t f = 0; f < state.sets.size(); ++f)
            if (state.sets[f].test(i)) state.q_cond[i][f] = state.r[f] / a[i];
    }
    return state;
}

// ---------------------------------------------------------------------------
// Maximization over distributions
// ---------------------------------------------------------------------------

MaxEntropyResult max_entropy_distribution(const Graph& g, double tol_bits,
                                          const SolverConfig& inner, long outer_budget) {
    if (!(tol_bits > 0.0)) throw InputError("tolerance must be positive");
    int n = g.vertex_count();
    double target = std::log2(fractional_chromatic_number(g, inner.is_cap, inner.lp_cap)
                                  .value.get_d());

    SolverConfig inner_cfg = inner;
    inner_cfg.tol_bits = std::min(tol_bits / 10.0, 1e-6);

    std::vector<double> prob(n, 1.0 / n);
    std::vector<double> best_p = prob;
    double best = -1.0;
    long stall = 0;
    bool polyak = false;

    for (long it = 1; it <= outer_budget; ++it) {
        auto res = entropy_fw(g, Distribution(prob, true), inner_cfg);
        std::vector<double> grad(n);
        for (int i = 0; i < n; ++i)
            grad[i] = -std::log2(std::max(res.minimizer[i], kLogFloor));
        double value = res.value_bits;
        if (value > best + tol_bits / 4) stall = 0;
        else ++stall;
        if (value > best) {
            best = value;
            best_p = prob;
        }
        if (target - best <= tol_bits) return {best_p, best, it, std::abs(target - best)};
        if (stall >= 200) {
            polyak = true; // the 1/sqrt(t) schedule stalled short of the certificate
            stall = 0;
        }

        double eta;
        if (polyak) {
            double norm = 0.0;
            for (int i = 0; i < n; ++i) norm = std::max(norm, std::abs(grad[i] - value));
            eta = (target - value) / std::max(norm * norm, 1e-12);
        } else {
            eta = 1.0 / std::sqrt(double(it));
        }
        double mx = -std::numeric_limits<double>::infinity();
        std::vector<double> logp(n);
        for (int i = 0; i < n; ++i) {
            logp[i] = std::log2(std::max(prob[i], kLogFloor)) + eta * grad[i];
            mx = std::max(mx, logp[i]);
        }
        double z = 0.0;
        for (int i = 0; i < n; ++i) {
            prob[i] = std::exp2(logp[i] - mx);
            z += prob[i];
        }
        for (auto& x : prob) x /= z;
    }
    throw NonConvergence("max-entropy ascent budget exhausted; best " + std::to_string(best) +
                             " vs log2 chi_f " + std::to_string(target),
                         EntropyResult{best, best_p, outer_budget, target - best, "mirror-ascent",
                                       false, {}});
}

// ---------------------------------------------------------------------------
// Splitting and antiblocker identities
// ---------------------------------------------------------------------------

double splitting_gap(const Graph& g, const Distribution& p, const SolverConfig& cfg) {
    double hg = entropy_fw(g, p, cfg).value_bits;
    double hc = entropy_fw(complement(g), p, cfg).value_bits;
    return hg + hc - entropy(p);
}

bool antiblocker_identity_check(const Graph& g, const Distribution& p, double tol_bits,
                                const SolverConfig& cfg) {
    double hv = corner_entropy(ConvexCorner::vertex_packing(g), p, cfg).value_bits;
    double hf =
        corner_entropy(ConvexCorner::fractional_vertex_packing(complement(g)), p, cfg).value_bits;
    return std::abs(entropy(p) - hv - hf) <= tol_bits;
}

} // namespace gent
