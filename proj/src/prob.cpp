#include "gent/prob.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gent/errors.hpp"

namespace gent {

Distribution::Distribution(std::vector<double> p, bool normalize) : p_(std::move(p)) {
    if (p_.empty()) throw InputError("distribution must be nonempty");
    double sum = 0.0;
    for (double x : p_) {
        if (!(x >= 0.0) || !std::isfinite(x))
            throw InputError("distribution entries must be finite and >= 0");
        sum += x;
    }
    if (normalize) {
        if (sum <= 0.0) throw InputError("cannot normalize a zero vector");
        for (double& x : p_) x /= sum;
    } else if (std::abs(sum - 1.0) > kDistributionTolerance) {
        throw InputError("distribution sums to " + std::to_string(sum) + ", expected 1");
    }
}

Distribution Distribution::uniform(int n) {
    if (n < 1) throw InputError("uniform distribution needs n >= 1");
    return Distribution(std::vector<double>(n, 1.0 / n), true);
}

double Distribution::mass(const Bitset& s) const {
    double m = 0.0;
    s.for_each([&](int i) { m += p_[i]; });
    return m;
}

double shannon_bits(const std::vector<double>& masses) {
    double h = 0.0;
    for (double x : masses)
        if (x > 0.0) h -= x * std::log2(x);
    return h;
}

double entropy(const Distribution& p) { return shannon_bits(p.values()); }

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw InputError("binary_entropy needs x in [0,1]");
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

double kl_divergence(const Distribution& p, const Distribution& q) {
    if (p.size() != q.size()) throw InputError("kl_divergence needs equal lengths");
    double d = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
        d += p[i] * std::log2(p[i] / q[i]);
    }
    return d < 0.0 ? 0.0 : d; // clamp the tiny negative rounding residue
}

JointDistribution::JointDistribution(int rows, int cols, std::vector<double> q)
    : rows_(rows), cols_(cols), q_(std::move(q)) {
    if (rows < 1 || cols < 1 || q_.size() != std::size_t(rows) * cols)
        throw InputError("joint distribution dimension mismatch");
    double sum = 0.0;
    for (double x : q_) {
        if (!(x >= 0.0) || !std::isfinite(x))
            throw InputError("joint entries must be finite and >= 0");
        sum += x;
    }
    if (std::abs(sum - 1.0) > kDistributionTolerance)
        throw InputError("joint distribution sums to " + std::to_string(sum) + ", expected 1");
}

JointDistribution JointDistribution::product(const Distribution& p, const Distribution& q) {
    std::vector<double> m(std::size_t(p.size()) * q.size());
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < q.size(); ++j) m[std::size_t(i) * q.size() + j] = p[i] * q[j];
    return JointDistribution(p.size(), q.size(), std::move(m));
}

std::vector<double> JointDistribution::row_marginal() const {
    std::vector<double> m(rows_, 0.0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m[i] += (*this)(i, j);
    return m;
}

std::vector<double> JointDistribution::col_marginal() const {
    std::vector<double> m(cols_, 0.0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m[j] += (*this)(i, j);
    return m;
}

double joint_entropy(const JointDistribution& j) {
    double h = 0.0;
    for (int a = 0; a < j.rows(); ++a)
        for (int b = 0; b < j.cols(); ++b) {
            double x = j(a, b);
            if (x > 0.0) h -= x * std::log2(x);
        }
    return h;
}

double mutual_information(const JointDistribution& j) {
    auto px = j.row_marginal();
    auto py = j.col_marginal();
    double mi = 0.0;
    for (int a = 0; a < j.rows(); ++a)
        for (int b = 0; b < j.cols(); ++b) {
            double q = j(a, b);
            if (q > 0.0) mi += q * std::log2(q / (px[a] * py[b]));
        }
    return mi < 0.0 ? 0.0 : mi;
}

double conditional_entropy(const JointDistribution& j) {
    return joint_entropy(j) - shannon_bits(j.row_marginal());
}

} // namespace gent
