#include "gent/lp.hpp"

#include <string>

#include "gent/errors.hpp"

namespace gent {

std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int LpProblem::add_variable(const Rational& cost) {
    objective.push_back(cost);
    return num_vars++;
}

void LpProblem::add_row(std::vector<std::pair<int, Rational>> coeffs, Sense sense, Rational rhs) {
    rows.push_back(Row{std::move(coeffs), sense, std::move(rhs)});
}

namespace {

struct Tableau {
    int m, cols;
    std::vector<std::vector<Rational>> a; // m x cols
    std::vector<Rational> b;              // m, kept >= 0
    std::vector<int> basis;               // basic column of each row

    void pivot(int r, int c) {
        Rational piv = a[r][c];
        for (auto& x : a[r]) x /= piv;
        b[r] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        basis[r] = c;
    }

    // Bland's rule: entering = lowest-index column with negative reduced
    // cost; leaving = min-ratio row, ties broken by lowest basic column.
    // Returns Optimal or Unbounded.
    LpStatus run(const std::vector<Rational>& cost, int allowed_cols) {
        for (;;) {
            std::vector<Rational> dual(m);
            for (int i = 0; i < m; ++i) dual[i] = cost[basis[i]];
            int enter = -1;
            for (int j = 0; j < allowed_cols && enter == -1; ++j) {
                Rational red = cost[j];
                for (int i = 0; i < m; ++i)
                    if (a[i][j] != 0) red -= dual[i] * a[i][j];
                if (red < 0) enter = j;
            }
            if (enter == -1) return LpStatus::Optimal;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (a[i][enter] <= 0) continue;
                Rational ratio = b[i] / a[i][enter];
                if (leave == -1 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == -1) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
    }
};

} // namespace

LpSolution lp_solve(const LpProblem& p, int column_cap) {
    if (p.num_vars > column_cap)
        throw CapExceeded("LP has " + std::to_string(p.num_vars) + " columns (cap " +
                          std::to_string(column_cap) + ")");
    int n = p.num_vars;
    int m = int(p.rows.size());

    // column layout: structural | slack/surplus | artificial
    int slacks = 0;
    for (const auto& r : p.rows)
        if (r.sense != Sense::Equal) ++slacks;
    Tableau t;
    t.m = m;
    t.cols = n + slacks;
    t.a.assign(m, std::vector<Rational>(n + slacks, Rational(0)));
    t.b.assign(m, Rational(0));
    t.basis.assign(m, -1);

    int next_slack = n;
    std::vector<int> needs_artificial;
    for (int i = 0; i < m; ++i) {
        const auto& row = p.rows[i];
        int sign = row.rhs < 0 ? -1 : 1; // keep b >= 0
        for (const auto& [j, v] : row.coeffs) {
            if (j < 0 || j >= n) throw InputError("LP row references unknown variable");
            t.a[i][j] += sign * v;
        }
        t.b[i] = sign * row.rhs;
        Sense s = row.sense;
        if (sign < 0) s = s == Sense::LessEq ? Sense::GreaterEq
                        : s == Sense::GreaterEq ? Sense::LessEq : Sense::Equal;
        if (s == Sense::LessEq) {
            t.a[i][next_slack] = 1;
            t.basis[i] = next_slack++;
        } else if (s == Sense::GreaterEq) {
            t.a[i][next_slack] = -1;
            ++next_slack;
            needs_artificial.push_back(i);
        } else {
            needs_artificial.push_back(i);
        }
    }

    int art_base = t.cols;
    t.cols += int(needs_artificial.size());
    for (auto& row : t.a) row.resize(t.cols, Rational(0));
    for (std::size_t k = 0; k < needs_artificial.size(); ++k) {
        int i = needs_artificial[k];
        t.a[i][art_base + int(k)] = 1;
        t.basis[i] = art_base + int(k);
    }

    if (!needs_artificial.empty()) {
        std::vector<Rational> phase1(t.cols, Rational(0));
        for (int j = art_base; j < t.cols; ++j) phase1[j] = 1;
        t.run(phase1, t.cols);
        Rational infeas(0);
        for (int i = 0; i < m; ++i)
            if (t.basis[i] >= art_base) infeas += t.b[i];
        if (infeas != 0) return {LpStatus::Infeasible, Rational(0), {}};
        // drive remaining artificials out of the basis (degenerate rows)
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] < art_base) continue;
            int j = 0;
            while (j < art_base && t.a[i][j] == 0) ++j;
            if (j < art_base) t.pivot(i, j);
            // an all-zero row is redundant; its artificial stays basic at 0
        }
    }

    std::vector<Rational> cost(t.cols, Rational(0));
    for (int j = 0; j < n; ++j) cost[j] = p.objective[j];
    if (t.run(cost, art_base) == LpStatus::Unbounded)
        return {LpStatus::Unbounded, Rational(0), {}};

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.x.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) sol.x[t.basis[i]] = t.b[i];
    sol.objective = 0;
    for (int j = 0; j < n; ++j) sol.objective += p.objective[j] * sol.x[j];
    return sol;
}

} // namespace gent
