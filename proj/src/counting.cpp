#include "gent/counting.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gent/errors.hpp"

namespace gent {

ShearerReport shearer_check(const std::vector<std::array<long long, 3>>& points) {
    if (points.empty()) throw InputError("shearer_check needs a nonempty point set");
    auto pts = points;
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
        throw InputError("shearer_check: duplicate point");
    auto distinct = [&](int i, int j) {
        std::vector<std::pair<long long, long long>> proj;
        proj.reserve(pts.size());
        for (const auto& p : pts) proj.emplace_back(p[i], p[j]);
        std::sort(proj.begin(), proj.end());
        proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
        return (long long)proj.size();
    };
    ShearerReport r;
    r.n = (long long)pts.size();
    r.n1 = distinct(0, 1); // XY
    r.n2 = distinct(0, 2); // XZ
    r.n3 = distinct(1, 2); // YZ
    r.holds = r.n * r.n <= r.n1 * r.n2 * r.n3;
    return r;
}

namespace {

struct BipartiteParts {
    std::vector<int> left, right;
};

BipartiteParts balanced_parts(const Graph& g, int cap) {
    auto parts = bipartition(g);
    if (!parts) throw InputError("graph is not bipartite");
    auto left = parts->part_a.to_vector();
    auto right = parts->part_b.to_vector();
    if (left.size() != right.size())
        throw InputError("unbalanced parts: " + std::to_string(left.size()) + " vs " +
                         std::to_string(right.size()));
    if (int(left.size()) > cap)
        throw CapExceeded("matching count needs parts <= " + std::to_string(cap));
    return {left, right};
}

// Ryser's permanent over 0/1 rows, Gray-code order.
long long permanent(const std::vector<std::uint64_t>& rows, int m) {
    std::vector<long long> rowsum(m, 0);
    long long total = 0;
    std::uint64_t subset = 0;
    for (std::uint64_t code = 1; code < (std::uint64_t(1) << m); ++code) {
        std::uint64_t gray = code ^ (code >> 1);
        std::uint64_t changed = gray ^ subset;
        int j = std::countr_zero(changed);
        int sign = (gray >> j & 1) ? 1 : -1;
        for (int i = 0; i < m; ++i)
            if (rows[i] >> j & 1) rowsum[i] += sign;
        subset = gray;
        long long prod = 1;
        for (int i = 0; i < m && prod != 0; ++i) prod *= rowsum[i];
        total += (std::popcount(gray) % 2 == m % 2 ? 1 : -1) * prod;
    }
    return total;
}

} // namespace

long long count_perfect_matchings(const Graph& g, int cap) {
    auto [left, right] = balanced_parts(g, cap);
    int m = int(left.size());
    std::vector<std::uint64_t> rows(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (g.has_edge(left[i], right[j])) rows[i] |= std::uint64_t(1) << j;
    return permanent(rows, m);
}

BregmanReport bregman_bound(const Graph& g, int cap) {
    auto [left, right] = balanced_parts(g, cap);
    double bound = 1.0;
    for (int v : left) {
        long long d = g.degree(v);
        if (d == 0) throw InputError("isolated vertex in the bound part");
        double fact = 1.0;
        for (long long i = 2; i <= d; ++i) fact *= double(i);
        bound *= std::pow(fact, 1.0 / double(d));
    }
    BregmanReport r;
    r.count = count_perfect_matchings(g, cap);
    r.bound = bound;
    r.holds = double(r.count) <= bound + 1e-9;
    return r;
}

} // namespace gent
