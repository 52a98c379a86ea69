#ifndef GENT_PROB_HPP
#define GENT_PROB_HPP

#include <vector>

#include "gent/bitset.hpp"

namespace gent {

inline constexpr double kDistributionTolerance = 1e-9;

/// Probability vector over 0..n-1. Validates nonnegativity and unit sum on
/// construction; renormalization happens only when explicitly requested.
class Distribution {
public:
    explicit Distribution(std::vector<double> p, bool normalize = false);
    static Distribution uniform(int n);

    int size() const { return int(p_.size()); }
    double operator[](int i) const { return p_[i]; }
    const std::vector<double>& values() const { return p_; }

    double mass(const Bitset& s) const;

private:
    std::vector<double> p_;
};

/// Shannon entropy in bits of an arbitrary nonnegative mass vector, with the
/// 0 log 0 = 0 convention. Does not require the masses to sum to one.
double shannon_bits(const std::vector<double>& masses);

double entropy(const Distribution& p);

/// h(x) = -x log x - (1-x) log(1-x) for x in [0,1].
double binary_entropy(double x);

/// D(p||q) in bits; +infinity when p puts mass where q does not.
double kl_divergence(const Distribution& p, const Distribution& q);

/// Joint probability matrix; rows index X, columns index Y.
class JointDistribution {
public:
    JointDistribution(int rows, int cols, std::vector<double> q);
    static JointDistribution product(const Distribution& p, const Distribution& q);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double operator()(int i, int j) const { return q_[std::size_t(i) * cols_ + j]; }

    std::vector<double> row_marginal() const; // distribution of X
    std::vector<double> col_marginal() const; // distribution of Y

private:
    int rows_, cols_;
    std::vector<double> q_;
};

double joint_entropy(const JointDistribution& j);
double mutual_information(const JointDistribution& j);
/// H(Y|X) where rows of the joint index X.
double conditional_entropy(const JointDistribution& j);

} // namespace gent

#endif
