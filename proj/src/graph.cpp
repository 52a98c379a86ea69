#include "gent/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>

#include "gent/errors.hpp"

namespace gent {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    adj_.assign(n_, Bitset(n_));
}

long Graph::edge_count() const {
    long deg_sum = 0;
    for (int v = 0; v < n_; ++v) deg_sum += degree(v);
    return deg_sum / 2;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) e.emplace_back(u, v);
        });
    return e;
}

Bitset Graph::full_vertex_set() const {
    Bitset b(n_);
    b.set_all();
    return b;
}

// ---------------------------------------------------------------------------
// DIMACS
// ---------------------------------------------------------------------------

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::optional<Graph> g;
    auto fail = [&](const std::string& what) {
        throw ParseError("line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (g) fail("duplicate problem line");
            std::string fmt;
            long m = 0;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 1)
                fail("expected `p edge <n> <m>` with n >= 1");
            g.emplace(n);
        } else if (tag == "e") {
            if (!g) fail("edge before problem line");
            int u = 0, v = 0;
            if (!(ls >> u >> v)) fail("expected `e <u> <v>`");
            if (u < 1 || u > n || v < 1 || v > n) fail("endpoint out of range");
            if (u == v) fail("self-loop");
            g->add_edge(u - 1, v - 1);
        } else {
            fail("unknown line tag `" + tag + "`");
        }
    }
    if (!g) throw ParseError("missing `p edge` line");
    return *g;
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    auto e = g.edges();
    out << "p edge " << g.vertex_count() << " " << e.size() << "\n";
    for (auto [u, v] : e) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

Graph make_empty(int n) {
    if (n < 1) throw InputError("empty graph needs n >= 1");
    return Graph(n);
}

Graph make_complete(int n) {
    if (n < 1) throw InputError("complete graph needs n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph make_path(int n) {
    if (n < 1) throw InputError("path needs n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_star(int leaves) {
    if (leaves < 1) throw InputError("star needs at least one leaf");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph make_complete_multipartite(const std::vector<int>& sizes) {
    if (sizes.empty()) throw InputError("complete multipartite needs part sizes");
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw InputError("part sizes must be >= 1");
        n += s;
    }
    Graph g(n);
    std::vector<int> part(n);
    int v = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (int j = 0; j < sizes[i]; ++j) part[v++] = int(i);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part[u] != part[w]) g.add_edge(u, w);
    return g;
}

Graph make_kneser(int v, int r) {
    if (r < 1 || v < 2 * r) throw InputError("kneser needs v >= 2r and r >= 1");
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << v); ++m)
        if (std::popcount(m) == r) subsets.push_back(m);
    Graph g(int(subsets.size()));
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if ((subsets[i] & subsets[j]) == 0) g.add_edge(int(i), int(j));
    return g;
}

Graph make_petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);         // outer 5-cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);               // spokes
    }
    return g;
}

Graph make_fig51() {
    Graph g(6);
    static constexpr int edges[][2] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 5},
                                       {4, 5}, {3, 4}, {1, 4}, {2, 5}};
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph make_fig52() {
    Graph g(10);
    static constexpr int edges[][2] = {{0, 2}, {0, 1}, {0, 3}, {1, 2}, {2, 3},
                                       {1, 4}, {3, 4}, {4, 5}, {5, 6}, {5, 7},
                                       {6, 8}, {7, 8}, {8, 9}, {6, 9}, {7, 9}};
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph generate(const std::string& family, const std::vector<int>& params) {
    auto arity = [&](std::size_t k) {
        if (params.size() != k)
            throw InputError("generator `" + family + "` expects " + std::to_string(k) +
                             " parameter(s)");
    };
    if (family == "cycle") { arity(1); return make_cycle(params[0]); }
    if (family == "complete") { arity(1); return make_complete(params[0]); }
    if (family == "path") { arity(1); return make_path(params[0]); }
    if (family == "star") { arity(1); return make_star(params[0]); }
    if (family == "empty") { arity(1); return make_empty(params[0]); }
    if (family == "kneser") { arity(2); return make_kneser(params[0], params[1]); }
    if (family == "petersen") { arity(0); return make_petersen(); }
    if (family == "fig51") { arity(0); return make_fig51(); }
    if (family == "fig52") { arity(0); return make_fig52(); }
    if (family == "complete_multipartite") {
        if (params.empty()) throw InputError("complete_multipartite expects part sizes");
        return make_complete_multipartite(params);
    }
    throw InputError("unknown graph family `" + family + "`");
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

Graph union_graphs(const Graph& f, const Graph& g) {
    if (f.vertex_count() != g.vertex_count())
        throw InputError("graph union needs equal vertex counts");
    Graph u = f;
    for (auto [a, b] : g.edges()) u.add_edge(a, b);
    return u;
}

Graph substitute(const Graph& g, int v, const Graph& f) {
    int ng = g.vertex_count(), nf = f.vertex_count();
    if (v < 0 || v >= ng) throw InputError("substitute: vertex out of range");
    int n = ng - 1 + nf;
    Graph r(n);
    // old vertex u != v keeps index u - (u > v); copies of f start at ng - 1
    auto idx = [&](int u) { return u < v ? u : u - 1; };
    for (auto [a, b] : g.edges())
        if (a != v && b != v) r.add_edge(idx(a), idx(b));
    for (auto [a, b] : f.edges()) r.add_edge(ng - 1 + a, ng - 1 + b);
    g.neighbors(v).for_each([&](int u) {
        for (int a = 0; a < nf; ++a) r.add_edge(idx(u), ng - 1 + a);
    });
    return r;
}

namespace {

long long checked_power_size(int base, int k, int cap) {
    if (k < 1) throw InputError("power exponent must be >= 1");
    long long size = 1;
    for (int i = 0; i < k; ++i) {
        size *= base;
        if (size > cap)
            throw CapExceeded("graph power would have " + std::to_string(size) +
                              "+ vertices (cap " + std::to_string(cap) + ")");
    }
    return size;
}

std::vector<int> tuple_of(long long index, int base, int k) {
    std::vector<int> t(k);
    for (int i = k - 1; i >= 0; --i) {
        t[i] = int(index % base);
        index /= base;
    }
    return t;
}

} // namespace

Graph conormal_power(const Graph& g, int k, int vertex_cap) {
    int base = g.vertex_count();
    long long n = checked_power_size(base, k, vertex_cap);
    Graph r(static_cast<int>(n));
    for (long long x = 0; x < n; ++x) {
        auto tx = tuple_of(x, base, k);
        for (long long y = x + 1; y < n; ++y) {
            auto ty = tuple_of(y, base, k);
            for (int i = 0; i < k; ++i)
                if (g.has_edge(tx[i], ty[i])) {
                    r.add_edge(int(x), int(y));
                    break;
                }
        }
    }
    return r;
}

Graph normal_power(const Graph& g, int k, int vertex_cap) {
    int base = g.vertex_count();
    long long n = checked_power_size(base, k, vertex_cap);
    Graph r(static_cast<int>(n));
    for (long long x = 0; x < n; ++x) {
        auto tx = tuple_of(x, base, k);
        for (long long y = x + 1; y < n; ++y) {
            auto ty = tuple_of(y, base, k);
            bool all = true;
            for (int i = 0; i < k && all; ++i)
                all = tx[i] == ty[i] || g.has_edge(tx[i], ty[i]);
            if (all) r.add_edge(int(x), int(y));
        }
    }
    return r;
}

Graph or_product(const Graph& g1, const Graph& g2, int vertex_cap) {
    long long n1 = g1.vertex_count(), n2 = g2.vertex_count();
    long long n = n1 * n2;
    if (n > vertex_cap)
        throw CapExceeded("OR product would have " + std::to_string(n) + " vertices (cap " +
                          std::to_string(vertex_cap) + ")");
    Graph r(static_cast<int>(n));
    for (long long x = 0; x < n; ++x) {
        int x1 = int(x / n2), x2 = int(x % n2);
        for (long long y = x + 1; y < n; ++y) {
            int y1 = int(y / n2), y2 = int(y % n2);
            if (g1.has_edge(x1, y1) || g2.has_edge(x2, y2)) r.add_edge(int(x), int(y));
        }
    }
    return r;
}

LineGraph line_graph(const Graph& g) {
    auto e = g.edges();
    if (e.empty()) throw InputError("line graph of an edgeless graph");
    Graph l(int(e.size()));
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            auto [a, b] = e[i];
            auto [c, d] = e[j];
            if (a == c || a == d || b == c || b == d) l.add_edge(int(i), int(j));
        }
    return {std::move(l), std::move(e)};
}

// ---------------------------------------------------------------------------
// Independent sets
// ---------------------------------------------------------------------------

namespace {

// Bron-Kerbosch with pivoting over the non-adjacency relation, so the
// reported cliques are exactly the maximal independent sets of g.
void bron_kerbosch(const std::vector<std::uint64_t>& nonadj, std::uint64_t r, std::uint64_t p,
                   std::uint64_t x, std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    std::uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (std::uint64_t m = px; m;) {
        int u = std::countr_zero(m);
        m &= m - 1;
        int deg = std::popcount(p & nonadj[u]);
        if (deg > best) {
            best = deg;
            pivot = u;
        }
    }
    std::uint64_t cands = p & ~nonadj[pivot];
    while (cands) {
        int v = std::countr_zero(cands);
        cands &= cands - 1;
        std::uint64_t bit = std::uint64_t(1) << v;
        bron_kerbosch(nonadj, r | bit, p & nonadj[v], x & nonadj[v], out);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace

std::vector<std::uint64_t> maximal_independent_sets_within(const Graph& g, std::uint64_t within,
                                                           int cap) {
    int n = g.vertex_count();
    if (n > cap)
        throw CapExceeded("independent-set enumeration needs n <= " + std::to_string(cap) +
                          ", got " + std::to_string(n));
    if (n > 64) throw CapExceeded("independent-set enumeration is limited to 64 vertices");
    if (within == 0) return {0};
    std::vector<std::uint64_t> nonadj(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!(within >> v & 1)) continue;
        nonadj[v] = within & ~g.neighbors(v).mask64() & ~(std::uint64_t(1) << v);
    }
    std::vector<std::uint64_t> masks;
    bron_kerbosch(nonadj, 0, within, 0, masks);
    std::sort(masks.begin(), masks.end());
    return masks;
}

std::vector<Bitset> maximal_independent_sets(const Graph& g, int cap) {
    int n = g.vertex_count();
    if (n > cap)
        throw CapExceeded("independent-set enumeration needs n <= " + std::to_string(cap) +
                          ", got " + std::to_string(n));
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    auto masks = maximal_independent_sets_within(g, all, cap);
    std::vector<Bitset> out;
    out.reserve(masks.size());
    for (auto m : masks) out.push_back(Bitset::from_mask(n, m));
    return out;
}

namespace {

struct WisSearch {
    const std::vector<std::uint64_t>& adj;
    const std::vector<double>& w;
    double best = 0.0;
    std::uint64_t best_set = 0;

    // candidates hold only vertices with positive weight
    void run(std::uint64_t cand, double acc, std::uint64_t chosen) {
        if (acc > best) {
            best = acc;
            best_set = chosen;
        }
        if (cand == 0) return;
        double bound = acc;
        for (std::uint64_t m = cand; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            bound += w[v];
        }
        if (bound <= best) return;
        // branch on the highest-weight candidate
        int pick = -1;
        double pw = -1.0;
        for (std::uint64_t m = cand; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (w[v] > pw) {
                pw = w[v];
                pick = v;
            }
        }
        std::uint64_t bit = std::uint64_t(1) << pick;
        run(cand & ~(adj[pick] | bit), acc + w[pick], chosen | bit);
        run(cand & ~bit, acc, chosen);
    }
};

} // namespace

WeightedSet max_weight_independent_set(const Graph& g, const std::vector<double>& w, int cap,
                                       const Bitset* candidates) {
    int n = g.vertex_count();
    if (int(w.size()) != n) throw InputError("weight vector length mismatch");
    if (n > cap)
        throw CapExceeded("independent-set search needs n <= " + std::to_string(cap) +
                          ", got " + std::to_string(n));
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).mask64();
    std::uint64_t cand = 0;
    for (int v = 0; v < n; ++v)
        if (w[v] > 0.0 && (!candidates || candidates->test(v))) cand |= std::uint64_t(1) << v;
    WisSearch s{adj, w};
    s.run(cand, 0.0, 0);
    return {Bitset::from_mask(n, s.best_set), s.best};
}

// ---------------------------------------------------------------------------
// Bipartite machinery
// ---------------------------------------------------------------------------

std::optional<BipartitionWitness> bipartition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            bool odd = false;
            g.neighbors(u).for_each([&](int v) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    odd = true;
                }
            });
            if (odd) return std::nullopt;
        }
    }
    BipartitionWitness w{Bitset(n), Bitset(n)};
    for (int v = 0; v < n; ++v) (color[v] == 0 ? w.part_a : w.part_b).set(v);
    return w;
}

std::vector<std::pair<int, int>> bipartite_max_matching(const Graph& g,
                                                        const BipartitionWitness& parts) {
    int n = g.vertex_count();
    std::vector<int> match(n, -1);
    std::vector<char> seen(n, 0);
    std::function<bool(int)> augment = [&](int u) -> bool {
        bool found = false;
        g.neighbors(u).for_each([&](int v) {
            if (found || seen[v]) return;
            seen[v] = 1;
            if (match[v] == -1 || augment(match[v])) {
                match[v] = u;
                match[u] = v;
                found = true;
            }
        });
        return found;
    };
    parts.part_a.for_each([&](int u) {
        std::fill(seen.begin(), seen.end(), 0);
        augment(u);
    });
    std::vector<std::pair<int, int>> m;
    parts.part_a.for_each([&](int u) {
        if (match[u] != -1) m.emplace_back(u, match[u]);
    });
    return m;
}

bool has_perfect_matching_bipartite(const Graph& g) {
    auto parts = bipartition(g);
    if (!parts) throw InputError("graph is not bipartite");
    if (g.vertex_count() % 2 != 0) return false;
    return int(bipartite_max_matching(g, *parts).size()) * 2 == g.vertex_count();
}

std::optional<Bitset> hall_violator(const Graph& g, const BipartitionWitness& parts) {
    // Search both orientations; a perfect matching exists iff neither side
    // has a deficient set.
    for (const Bitset* side : {&parts.part_a, &parts.part_b}) {
        auto matching = bipartite_max_matching(g, {*side, side->complement_set()});
        int ssize = side->count();
        if (int(matching.size()) == ssize && 2 * ssize == g.vertex_count()) continue;
        // Alternating reachability from unmatched side vertices; the reached
        // side vertices D satisfy |N(D)| = |D| - deficiency < |D|.
        int n = g.vertex_count();
        std::vector<int> match(n, -1);
        for (auto [u, v] : matching) {
            match[u] = v;
            match[v] = u;
        }
        Bitset reached_side(n), reached_other(n);
        std::vector<int> queue;
        side->for_each([&](int u) {
            if (match[u] == -1) {
                reached_side.set(u);
                queue.push_back(u);
            }
        });
        if (queue.empty()) continue; // this side saturated
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            g.neighbors(u).for_each([&](int v) {
                if (reached_other.test(v)) return;
                reached_other.set(v);
                int back = match[v];
                if (back != -1 && !reached_side.test(back)) {
                    reached_side.set(back);
                    queue.push_back(back);
                }
            });
        }
        return reached_side;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cuts, bridges, components
// ---------------------------------------------------------------------------

int boundary_size(const Graph& g, const Bitset& u) {
    int cut = 0;
    u.for_each([&](int v) { cut += g.neighbors(v).minus(u).count(); });
    return cut;
}

long induced_edge_count(const Graph& g, const Bitset& u) {
    long twice = 0;
    u.for_each([&](int v) { twice += (g.neighbors(v) & u).count(); });
    return twice / 2;
}

std::vector<std::pair<int, int>> bridges(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> out;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        bool skipped_parent = false;
        g.neighbors(u).for_each([&](int v) {
            if (v == parent && !skipped_parent) {
                skipped_parent = true; // simple graphs: at most one parent edge
                return;
            }
            if (disc[v] == -1) {
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) out.emplace_back(std::min(u, v), std::max(u, v));
            } else {
                low[u] = std::min(low[u], disc[v]);
            }
        });
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] == -1) dfs(v, -1);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_k_regular(const Graph& g, int k) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

std::vector<Bitset> components(const Graph& g) {
    int n = g.vertex_count();
    Bitset seen(n);
    std::vector<Bitset> comps;
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        Bitset comp(n);
        std::vector<int> queue{s};
        comp.set(s);
        seen.set(s);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            g.neighbors(u).for_each([&](int v) {
                if (!seen.test(v)) {
                    seen.set(v);
                    comp.set(v);
                    queue.push_back(v);
                }
            });
        }
        comps.push_back(comp);
    }
    return comps;
}

Graph induced_subgraph(const Graph& g, const Bitset& u, std::vector<int>* vertices) {
    auto verts = u.to_vector();
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = int(i);
    Graph sub(int(verts.size()));
    for (int v : verts)
        (g.neighbors(v) & u).for_each([&](int w) {
            if (v < w) sub.add_edge(index[v], index[w]);
        });
    if (vertices) *vertices = std::move(verts);
    return sub;
}

} // namespace gent
