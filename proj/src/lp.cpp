#include "fuzzpolar/lp.hpp"

#include <cassert>
#include <cstddef>

namespace fuzzpolar {

namespace {

// Dense simplex over { y >= 0 : T y = rhs } with an explicit basis.
// Columns are indexed 0..ncols-1; basis[i] is the column basic in row i.
struct Tableau {
    std::vector<Vec> t; // m rows, ncols entries
    Vec rhs;            // m entries, kept >= 0
    std::vector<std::size_t> basis;

    std::size_t rows() const { return t.size(); }
    std::size_t cols() const { return t.empty() ? 0 : t[0].size(); }

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = Rational(1) / t[r][c];
        for (auto& x : t[r]) x *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rational f = t[i][c];
            for (std::size_t j = 0; j < cols(); ++j) t[i][j] -= f * t[r][j];
            rhs[i] -= f * rhs[r];
        }
        basis[r] = c;
    }

    // Maximizes obj (a row of reduced costs is derived internally).
    // allowed(c) filters candidate entering columns.
    // Returns false when unbounded.
    template <typename Allowed>
    bool optimize(const Vec& obj, Allowed allowed) {
        for (;;) {
            // Reduced costs: obj_j - obj_B . column_j. Bland: first improving col.
            Vec dual(rows());
            for (std::size_t i = 0; i < rows(); ++i) dual[i] = obj[basis[i]];
            std::size_t enter = cols();
            for (std::size_t j = 0; j < cols(); ++j) {
                if (!allowed(j)) continue;
                Rational red = obj[j];
                for (std::size_t i = 0; i < rows(); ++i) red -= dual[i] * t[i][j];
                if (red > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols()) return true;
            // Ratio test, Bland tie-break on smallest basis column.
            std::size_t leave = rows();
            Rational best;
            for (std::size_t i = 0; i < rows(); ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = rhs[i] / t[i][enter];
                if (leave == rows() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows()) return false; // unbounded
            pivot(leave, enter);
        }
    }

    Vec solution() const {
        Vec y(cols(), Rational(0));
        for (std::size_t i = 0; i < rows(); ++i) y[basis[i]] = rhs[i];
        return y;
    }
};

} // namespace

LpResult lp_maximize(const std::vector<Vec>& rows, const Vec& rhs_in, const Vec& c) {
    const std::size_t n = c.size();
    const std::size_t m = rows.size();
    if (m == 0) {
        // Unconstrained: any nonzero objective direction is unbounded.
        if (is_zero_vec(c)) return {LpStatus::Optimal, 0, Vec(n, Rational(0))};
        return {LpStatus::Unbounded, 0, Vec(n, Rational(0))};
    }
    // Standard form: x = u - w, u,w >= 0; slack per row; artificials for phase 1.
    const std::size_t nstruct = 2 * n + m;
    Tableau tab;
    tab.t.assign(m, Vec(nstruct + m, Rational(0)));
    tab.rhs.assign(m, Rational(0));
    tab.basis.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        assert(rows[i].size() == n);
        int s = rhs_in[i] < 0 ? -1 : 1; // keep rhs nonnegative
        for (std::size_t j = 0; j < n; ++j) {
            tab.t[i][j] = Rational(s) * rows[i][j];
            tab.t[i][n + j] = Rational(-s) * rows[i][j];
        }
        tab.t[i][2 * n + i] = Rational(s); // slack
        tab.t[i][nstruct + i] = 1;         // artificial
        tab.rhs[i] = Rational(s) * rhs_in[i];
        tab.basis[i] = nstruct + i;
    }

    // Phase 1: maximize -(sum of artificials).
    Vec phase1(nstruct + m, Rational(0));
    for (std::size_t j = nstruct; j < nstruct + m; ++j) phase1[j] = -1;
    bool ok = tab.optimize(phase1, [](std::size_t) { return true; });
    assert(ok); // phase-1 objective is bounded above by 0
    (void)ok;
    Rational art_sum = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis[i] >= nstruct) art_sum += tab.rhs[i];
    if (art_sum != 0) return {LpStatus::Infeasible, 0, {}};

    // Drive leftover (degenerate) artificials out of the basis.
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < nstruct) continue;
        std::size_t c2 = nstruct;
        for (std::size_t j = 0; j < nstruct; ++j)
            if (tab.t[i][j] != 0) {
                c2 = j;
                break;
            }
        if (c2 < nstruct) tab.pivot(i, c2);
        // else: redundant row; harmless to leave with zero rhs.
    }

    // Phase 2 over structural columns only.
    Vec phase2(nstruct + m, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        phase2[j] = c[j];
        phase2[n + j] = -c[j];
    }
    auto structural = [&](std::size_t j) { return j < nstruct; };
    if (!tab.optimize(phase2, structural)) {
        Vec y = tab.solution();
        Vec x(n);
        for (std::size_t j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
        return {LpStatus::Unbounded, 0, std::move(x)};
    }
    Vec y = tab.solution();
    Vec x(n);
    Rational val = 0;
    for (std::size_t j = 0; j < n; ++j) {
        x[j] = y[j] - y[n + j];
        val += c[j] * x[j];
    }
    return {LpStatus::Optimal, val, std::move(x)};
}

} // namespace fuzzpolar
