#include "gent/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "gent/errors.hpp"

namespace gent {

bool is_proper_coloring(const Graph& g, const Coloring& c) {
    Bitset covered(g.vertex_count());
    for (const auto& cls : c.classes) {
        if (cls.intersects(covered)) return false;
        bool independent = true;
        cls.for_each([&](int v) {
            if ((g.neighbors(v) & cls).any()) independent = false;
        });
        if (!independent) return false;
        covered = covered | cls;
    }
    return covered.count() == g.vertex_count();
}

bool is_grundy_coloring(const Graph& g, const Coloring& c) {
    if (!is_proper_coloring(g, c)) return false;
    for (std::size_t i = 1; i < c.classes.size(); ++i) {
        bool ok = true;
        c.classes[i].for_each([&](int v) {
            for (std::size_t j = 0; j < i; ++j)
                if (!g.neighbors(v).intersects(c.classes[j])) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

std::vector<double> color_sequence(const Coloring& c, const Distribution& p) {
    std::vector<double> seq;
    for (const auto& cls : c.classes) seq.push_back(p.mass(cls));
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return seq;
}

bool sequence_dominates(const std::vector<double>& c, const std::vector<double>& d) {
    double pc = 0.0, pd = 0.0;
    std::size_t k = std::max(c.size(), d.size());
    for (std::size_t i = 0; i < k; ++i) {
        pc += i < c.size() ? c[i] : 0.0;
        pd += i < d.size() ? d[i] : 0.0;
        if (pc < pd - 1e-12) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Exact chromatic number (DSATUR branch and bound)
// ---------------------------------------------------------------------------

namespace {

struct ChiSearch {
    const Graph& g;
    int n;
    std::vector<int> color;   // -1 = uncolored
    std::vector<int> best_coloring;
    int best = 0;             // incumbent color count
    int clique_bound = 1;

    explicit ChiSearch(const Graph& gr) : g(gr), n(gr.vertex_count()), color(n, -1) {}

    int saturation(int v) const {
        std::uint64_t seen = 0;
        g.neighbors(v).for_each([&](int u) {
            if (color[u] >= 0) seen |= std::uint64_t(1) << color[u];
        });
        return std::popcount(seen);
    }

    int pick_vertex() const {
        int pick = -1, sat = -1, deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            int s = saturation(v), d = g.degree(v);
            if (s > sat || (s == sat && d > deg)) {
                pick = v;
                sat = s;
                deg = d;
            }
        }
        return pick;
    }

    void dfs(int colored, int used) {
        if (used >= best) return;
        if (colored == n) {
            best = used;
            best_coloring = color;
            return;
        }
        int v = pick_vertex();
        std::uint64_t forbidden = 0;
        g.neighbors(v).for_each([&](int u) {
            if (color[u] >= 0) forbidden |= std::uint64_t(1) << color[u];
        });
        int limit = std::min(used + 1, best - 1);
        for (int c = 0; c < limit; ++c) {
            if (forbidden >> c & 1) continue;
            color[v] = c;
            dfs(colored + 1, std::max(used, c + 1));
            color[v] = -1;
            if (best == clique_bound) return; // provably optimal
        }
    }
};

// greedy coloring in DSATUR order, used as the initial incumbent
std::pair<int, std::vector<int>> dsatur_greedy(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, sat = -1, deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            std::uint64_t seen = 0;
            g.neighbors(v).for_each([&](int u) {
                if (color[u] >= 0) seen |= std::uint64_t(1) << color[u];
            });
            int s = std::popcount(seen), d = g.degree(v);
            if (s > sat || (s == sat && d > deg)) {
                pick = v;
                sat = s;
                deg = d;
            }
        }
        std::uint64_t forbidden = 0;
        g.neighbors(pick).for_each([&](int u) {
            if (color[u] >= 0) forbidden |= std::uint64_t(1) << color[u];
        });
        int c = 0;
        while (forbidden >> c & 1) ++c;
        color[pick] = c;
        used = std::max(used, c + 1);
    }
    return {used, color};
}

int greedy_clique_size(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int best = 0;
    for (int start : order) {
        std::vector<int> clique{start};
        Bitset common = g.neighbors(start);
        for (int v : order) {
            if (v == start || !common.test(v)) continue;
            clique.push_back(v);
            common = common & g.neighbors(v);
        }
        best = std::max(best, int(clique.size()));
    }
    return best;
}

Coloring classes_from_assignment(int n, const std::vector<int>& color, int used) {
    Coloring c;
    c.classes.assign(used, Bitset(n));
    for (int v = 0; v < n; ++v) c.classes[color[v]].set(v);
    return c;
}

} // namespace

ChromaticResult chromatic_number(const Graph& g, int cap) {
    int n = g.vertex_count();
    if (n > cap)
        throw CapExceeded("chromatic number needs n <= " + std::to_string(cap) + ", got " +
                          std::to_string(n));
    if (n == 0) return {0, {}};
    ChiSearch s(g);
    auto [greedy_k, greedy_colors] = dsatur_greedy(g);
    s.best = greedy_k;
    s.best_coloring = greedy_colors;
    s.clique_bound = greedy_clique_size(g);
    if (s.best > s.clique_bound) s.dfs(0, 0);
    return {s.best, classes_from_assignment(n, s.best_coloring, s.best)};
}

int clique_number(const Graph& g, int cap) {
    if (g.vertex_count() > cap)
        throw CapExceeded("clique number needs n <= " + std::to_string(cap));
    std::vector<double> unit(g.vertex_count(), 1.0);
    return int(max_weight_independent_set(complement(g), unit, cap).set.count());
}

// ---------------------------------------------------------------------------
// Grundy number
// ---------------------------------------------------------------------------

namespace {

// longest chain of iteratively removed maximal independent sets
int grundy_rec(const Graph& g, std::uint64_t remaining,
               std::unordered_map<std::uint64_t, std::pair<int, std::uint64_t>>& memo) {
    if (remaining == 0) return 0;
    auto it = memo.find(remaining);
    if (it != memo.end()) return it->second.first;
    int best = 0;
    std::uint64_t best_set = 0;
    for (auto m : maximal_independent_sets_within(g, remaining, 64)) {
        int sub = 1 + grundy_rec(g, remaining & ~m, memo);
        if (sub > best) {
            best = sub;
            best_set = m;
        }
    }
    memo[remaining] = {best, best_set};
    return best;
}

} // namespace

GrundyResult grundy_number(const Graph& g, int cap) {
    int n = g.vertex_count();
    if (n > cap)
        throw CapExceeded("grundy number needs n <= " + std::to_string(cap) + ", got " +
                          std::to_string(n));
    std::unordered_map<std::uint64_t, std::pair<int, std::uint64_t>> memo;
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    int gamma = grundy_rec(g, all, memo);
    Coloring witness;
    std::uint64_t rest = all;
    while (rest) {
        auto choice = memo.at(rest).second;
        witness.classes.push_back(Bitset::from_mask(n, choice));
        rest &= ~choice;
    }
    return {gamma, witness};
}

// ---------------------------------------------------------------------------
// Minimum-entropy coloring
// ---------------------------------------------------------------------------

namespace {

double sequence_entropy(std::vector<double> masses) {
    double h = 0.0;
    for (double m : masses)
        if (m > 0.0) h -= m * std::log2(m);
    return h;
}

struct MinEntropySearch {
    const Graph& g;
    const Distribution& p;
    int n;
    double best = std::numeric_limits<double>::infinity();
    // colorings with entropy within tie tolerance of the incumbent
    struct Candidate {
        double entropy;
        std::vector<std::uint64_t> classes;
    };
    std::vector<Candidate> ties;
    std::vector<std::uint64_t> chain;
    std::vector<double> masses;
    static constexpr double kTie = 1e-9;

    MinEntropySearch(const Graph& gr, const Distribution& pr)
        : g(gr), p(pr), n(gr.vertex_count()) {}

    double mass_of(std::uint64_t m) const {
        double s = 0.0;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            s += p[v];
        }
        return s;
    }

    // Lower bound: the most dominating completion lumps all remaining mass
    // into one class; dominance implies no completion beats its entropy.
    double lower_bound(double remaining_mass) const {
        auto seq = masses;
        if (remaining_mass > 0.0) seq.push_back(remaining_mass);
        return sequence_entropy(seq);
    }

    void record() {
        double h = sequence_entropy(masses);
        if (h < best - kTie) {
            best = h;
            std::erase_if(ties, [&](const Candidate& c) { return c.entropy > best + kTie; });
        }
        if (h <= best + kTie) ties.push_back({h, chain});
    }

    void dfs(std::uint64_t remaining, double remaining_mass) {
        if (remaining == 0) {
            record();
            return;
        }
        if (lower_bound(remaining_mass) > best + kTie) return;
        auto sets = maximal_independent_sets_within(g, remaining, 64);
        // heavier classes first to reach strong incumbents early
        std::sort(sets.begin(), sets.end(), [&](std::uint64_t a, std::uint64_t b) {
            double ma = mass_of(a), mb = mass_of(b);
            if (ma != mb) return ma > mb;
            return a < b;
        });
        for (auto m : sets) {
            double cm = mass_of(m);
            chain.push_back(m);
            masses.push_back(cm);
            dfs(remaining & ~m, remaining_mass - cm);
            masses.pop_back();
            chain.pop_back();
        }
    }
};

} // namespace

MinEntropyResult min_entropy_coloring(const Graph& g, const Distribution& p, int cap) {
    int n = g.vertex_count();
    if (p.size() != n) throw InputError("graph and distribution sizes differ");
    if (n > cap)
        throw CapExceeded("minimum-entropy coloring needs n <= " + std::to_string(cap) +
                          ", got " + std::to_string(n));
    MinEntropySearch s(g, p);
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    s.dfs(all, 1.0);
    // among the ties pick the exact minimum, then fewest classes, then the
    // lexicographically least chain, for determinism
    const MinEntropySearch::Candidate* pick = nullptr;
    for (const auto& c : s.ties) {
        if (c.entropy > s.best + MinEntropySearch::kTie) continue;
        if (!pick || c.entropy < pick->entropy - MinEntropySearch::kTie ||
            (std::abs(c.entropy - pick->entropy) <= MinEntropySearch::kTie &&
             (c.classes.size() < pick->classes.size() ||
              (c.classes.size() == pick->classes.size() && c.classes < pick->classes))))
            pick = &c;
    }
    MinEntropyResult out;
    out.entropy_bits = pick->entropy;
    for (auto m : pick->classes) out.coloring.classes.push_back(Bitset::from_mask(n, m));
    // order classes by nonincreasing mass
    std::stable_sort(out.coloring.classes.begin(), out.coloring.classes.end(),
                     [&](const Bitset& a, const Bitset& b) { return p.mass(a) > p.mass(b); });
    return out;
}

int chi_H(const Graph& g, const Distribution& p, int cap) {
    int n = g.vertex_count();
    if (p.size() != n) throw InputError("graph and distribution sizes differ");
    if (n > cap)
        throw CapExceeded("chi_H needs n <= " + std::to_string(cap) + ", got " +
                          std::to_string(n));
    MinEntropySearch s(g, p);
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    s.dfs(all, 1.0);
    std::size_t fewest = SIZE_MAX;
    for (const auto& c : s.ties)
        if (c.entropy <= s.best + MinEntropySearch::kTie)
            fewest = std::min(fewest, c.classes.size());
    return int(fewest);
}

MaxChiH max_chi_H(const Graph& g, int grundy_cap, int coloring_cap) {
    auto grundy = grundy_number(g, grundy_cap);
    MaxChiH out;
    out.value = grundy.gamma;
    out.witness_verified = false;
    int n = g.vertex_count();
    for (double eps : {0.25, 0.125, 0.0625}) {
        // class t of the maximum Grundy coloring gets mass ~ eps^t, spread
        // uniformly inside the class
        std::vector<double> w(n, 0.0);
        double scale = 1.0;
        for (const auto& cls : grundy.witness.classes) {
            scale *= eps;
            double per = scale / cls.count();
            cls.for_each([&](int v) { w[v] = per; });
        }
        Distribution dist(w, true);
        out.witness = dist.values();
        if (chi_H(g, dist, coloring_cap) == grundy.gamma) {
            out.witness_verified = true;
            break;
        }
    }
    return out;
}

double clique_entropy(const Graph& g, const Distribution& p, const SolverConfig& cfg) {
    return entropy(p) - entropy_fw(complement(g), p, cfg).value_bits;
}

double chromatic_entropy_lower_bound(const Graph& g, int cap) {
    std::vector<double> unit(g.vertex_count(), 1.0);
    double alpha = max_weight_independent_set(g, unit, cap).weight;
    return std::log2(double(g.vertex_count()) / alpha);
}

} // namespace gent
