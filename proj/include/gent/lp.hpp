#ifndef GENT_LP_HPP
#define GENT_LP_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace gent {

/// Exact rational number; canonical reduced form with positive denominator.
using Rational = mpq_class;

/// Serialize as "p/q" (denominator always written).
std::string rational_to_string(const Rational& r);

enum class Sense { LessEq, Equal, GreaterEq };

/// min c'x subject to row constraints and x >= 0, all data rational.
struct LpProblem {
    struct Row {
        std::vector<std::pair<int, Rational>> coeffs;
        Sense sense;
        Rational rhs;
    };
    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<Row> rows;

    int add_variable(const Rational& cost);
    void add_row(std::vector<std::pair<int, Rational>> coeffs, Sense sense, Rational rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status;
    Rational objective; // meaningful only when Optimal
    std::vector<Rational> x;
};

inline constexpr int kDefaultLpColumnCap = 500;

/// Two-phase primal simplex with Bland's anti-cycling rule; everything exact.
LpSolution lp_solve(const LpProblem& p, int column_cap = kDefaultLpColumnCap);

} // namespace gent

#endif
