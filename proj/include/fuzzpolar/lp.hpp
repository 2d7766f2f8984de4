#ifndef FUZZPOLAR_LP_HPP
#define FUZZPOLAR_LP_HPP

#include "fuzzpolar/linalg.hpp"

namespace fuzzpolar {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
    LpStatus status;
    Rational value; // meaningful for Optimal
    Vec point;      // an attaining point for Optimal, a feasible point for Unbounded
};

// Maximizes c.x over { x free : rows[i].x <= rhs[i] }.
// Exact rational simplex with Bland's rule; no tolerances anywhere.
LpResult lp_maximize(const std::vector<Vec>& rows, const Vec& rhs, const Vec& c);

} // namespace fuzzpolar

#endif
