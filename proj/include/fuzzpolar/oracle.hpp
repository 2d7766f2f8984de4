#ifndef FUZZPOLAR_ORACLE_HPP
#define FUZZPOLAR_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "fuzzpolar/dual_pair.hpp"
#include "fuzzpolar/fuzzy_set.hpp"

namespace fuzzpolar {

// Brute-force certification of the exact implementations on sampled
// points. Everything here is rational arithmetic: "brute force" means
// quantifier enumeration, so agreement checks are equalities.

struct GridAxis {
    Rational lo, hi, step; // step > 0, lo <= hi
};

class Grid {
public:
    Grid(std::vector<GridAxis> axes, std::size_t cap = kDefaultCap);

    static constexpr std::size_t kDefaultCap = 100000;

    // Uniform [-extent, extent] per axis with the given number of steps.
    static Grid symmetric(int dim, const Rational& extent, int steps_per_side,
                          std::size_t cap = kDefaultCap);

    int dim() const { return static_cast<int>(axes_.size()); }
    const std::vector<Vec>& points() const { return points_; }

private:
    std::vector<GridAxis> axes_;
    std::vector<Vec> points_;
};

struct GradedPoint {
    Vec point;
    Grade grade;
};

using GradeTable = std::vector<GradedPoint>;

// Membership at each grid point via region containment.
GradeTable oracle_membership(const StepFuzzySet& mu, const Grid& grid);

// Breakpoint lattice for polar oracles: all grades of mu, all complements
// 1 - theta clipped to (0,1], and midpoints between adjacent entries.
std::vector<Grade> polar_theta_grid(const StepFuzzySet& mu);

// Literal sup-of-down-set evaluation of the polar over the theta grid.
// The down-set { theta : x' in the polar of the (1-theta)-cut } is sampled
// on the grid; one extra midpoint probe resolves whether the sup sits at
// the last passing or the first failing grid value.
GradeTable oracle_polar(const StepFuzzySet& mu, const Grid& dual_grid,
                        const std::vector<Grade>& theta_grid,
                        const DualPair& pair);

// Pointwise sup-min over all grid decompositions x = x1 + (x - x1).
GradeTable oracle_add(const StepFuzzySet& mu, const StepFuzzySet& eta,
                      const Grid& grid);

struct CompareReport {
    std::vector<GradedPoint> differences; // table entries the exact set misses
    bool pass() const { return differences.empty(); }
};

// Grid points where membership(exact, x) differs from the table.
CompareReport compare(const StepFuzzySet& exact, const GradeTable& table);

} // namespace fuzzpolar

#endif
