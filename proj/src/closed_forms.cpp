#include "gent/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "gent/errors.hpp"

namespace gent {

double entropy_complete(const Distribution& p) { return entropy(p); }

double entropy_complete_multipartite(const std::vector<int>& sizes, const Distribution& p) {
    int total = 0;
    for (int s : sizes) {
        if (s < 1) throw InputError("part sizes must be >= 1");
        total += s;
    }
    if (total != p.size()) throw InputError("part sizes do not sum to the distribution length");
    std::vector<double> masses;
    int v = 0;
    for (int s : sizes) {
        double m = 0.0;
        for (int j = 0; j < s; ++j) m += p[v++];
        masses.push_back(m);
    }
    return shannon_bits(masses);
}

namespace {

struct Orientation {
    bool condition_holds;
    double value;
    std::vector<std::pair<Bitset, Bitset>> blocks;
};

// one binary-entropy block of the partition value
double block_value(double d_mass, double u_mass) {
    double total = d_mass + u_mass;
    if (total <= 0.0) return 0.0;
    return total * binary_entropy(d_mass / total);
}

Orientation evaluate_orientation(const Graph& g, const Distribution& p, const Bitset& a,
                                 const Bitset& b) {
    int n = g.vertex_count();
    auto a_verts = a.to_vector();
    int k = int(a_verts.size());
    double mass_a = p.mass(a), mass_b = p.mass(b);

    auto neighborhood = [&](std::uint64_t d_mask, const Bitset& inside) {
        Bitset nd(n);
        for (int i = 0; i < k; ++i)
            if (d_mask >> i & 1) nd = nd | g.neighbors(a_verts[i]);
        return nd & inside;
    };
    auto subset_mass = [&](std::uint64_t d_mask) {
        double m = 0.0;
        for (int i = 0; i < k; ++i)
            if (d_mask >> i & 1) m += p[a_verts[i]];
        return m;
    };

    // P(D)/P(A) <= P(N(D))/P(B) for all D, compared by cross-multiplication
    bool holds = true;
    for (std::uint64_t d = 1; d < (std::uint64_t(1) << k) && holds; ++d) {
        double pd = subset_mass(d);
        double pn = p.mass(neighborhood(d, b));
        if (pd * mass_b > pn * mass_a + 1e-15) holds = false;
    }
    if (holds) return {true, binary_entropy(mass_a), {}};

    // greedy blocks from the proof: maximize P(D)/P(RA) * P(RB)/P(N(D))
    Orientation out{false, 0.0, {}};
    Bitset ra = a, rb = b;
    while (ra.any()) {
        auto rest = ra.to_vector();
        int rk = int(rest.size());
        double mass_ra = 0.0;
        for (int v : rest) mass_ra += p[v];
        double mass_rb = p.mass(rb);
        std::uint64_t best_d = 0;
        double best_num = -1.0, best_den = 0.0; // ratio num/den, den=0 => infinity
        for (std::uint64_t d = 1; d < (std::uint64_t(1) << rk); ++d) {
            double pd = 0.0;
            Bitset dset(n);
            for (int i = 0; i < rk; ++i)
                if (d >> i & 1) {
                    pd += p[rest[i]];
                    dset.set(rest[i]);
                }
            Bitset nd(n);
            dset.for_each([&](int v) { nd = nd | g.neighbors(v); });
            nd = nd & rb;
            double num = pd * mass_rb;
            double den = p.mass(nd) * mass_ra;
            // compare num/den > best_num/best_den without dividing
            bool better;
            if (best_num < 0.0) better = true;
            else if (den == 0.0 && best_den == 0.0) better = num > best_num + 1e-15;
            else if (den == 0.0) better = num > 1e-15;
            else if (best_den == 0.0) better = false;
            else better = num * best_den > best_num * den + 1e-15;
            if (better) {
                best_d = d;
                best_num = num;
                best_den = den;
            }
        }
        Bitset dset(n);
        for (int i = 0; i < rk; ++i)
            if (best_d >> i & 1) dset.set(rest[i]);
        Bitset useti(n);
        dset.for_each([&](int v) { useti = useti | g.neighbors(v); });
        useti = useti & rb;
        out.blocks.emplace_back(dset, useti);
        out.value += block_value(p.mass(dset), p.mass(useti));
        ra = ra.minus(dset);
        rb = rb.minus(useti);
    }
    // leftover B vertices have no remaining neighbors; mathematically
    // impossible without isolated vertices once A is exhausted
    return out;
}

} // namespace

BipartiteEntropyReport bipartite_entropy(const Graph& g, const Distribution& p, int cap,
                                         const SolverConfig& cfg) {
    int n = g.vertex_count();
    if (p.size() != n) throw InputError("graph and distribution sizes differ");
    if (n > cap)
        throw CapExceeded("bipartite entropy needs n <= " + std::to_string(cap) + ", got " +
                          std::to_string(n));
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) throw InputError("bipartite entropy: isolated vertex");
    auto parts = bipartition(g);
    if (!parts) throw InputError("bipartite entropy: graph is not bipartite");

    Bitset a = parts->part_a, b = parts->part_b;
    if (b.count() < a.count()) std::swap(a, b); // the smaller part is A

    Orientation primary = evaluate_orientation(g, p, a, b);
    Orientation other = evaluate_orientation(g, p, b, a);
    if (std::abs(primary.value - other.value) > 1e-7)
        throw std::logic_error("bipartite entropy: orientations disagree: " +
                               std::to_string(primary.value) + " vs " +
                               std::to_string(other.value));

    SolverConfig check = cfg;
    check.tol_bits = std::min(cfg.tol_bits, 1e-6);
    double solver = entropy_fw(g, p, check).value_bits;
    if (std::abs(primary.value - solver) > 1e-5)
        throw std::logic_error("bipartite entropy: closed form " + std::to_string(primary.value) +
                               " disagrees with solver " + std::to_string(solver));

    BipartiteEntropyReport rep;
    rep.condition_holds = primary.condition_holds;
    rep.value_bits = primary.value;
    if (!primary.condition_holds) rep.partition = primary.blocks;
    rep.part_a = a;
    rep.part_b = b;
    return rep;
}

double entropy_by_components(const Graph& g, const Distribution& p, const SolverConfig& cfg) {
    if (p.size() != g.vertex_count()) throw InputError("graph and distribution sizes differ");
    double total = 0.0;
    for (const auto& comp : components(g)) {
        double mass = p.mass(comp);
        if (mass <= 0.0) continue; // zero-mass components contribute nothing
        std::vector<int> verts;
        Graph sub = induced_subgraph(g, comp, &verts);
        std::vector<double> q(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) q[i] = p[verts[i]] / mass;
        total += mass * entropy_fw(sub, Distribution(q, true), cfg).value_bits;
    }
    return total;
}

} // namespace gent
