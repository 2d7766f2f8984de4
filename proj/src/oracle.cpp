#include "fuzzpolar/oracle.hpp"

#include <algorithm>

#include "fuzzpolar/errors.hpp"

namespace fuzzpolar {

Grid::Grid(std::vector<GridAxis> axes, std::size_t cap) : axes_(std::move(axes)) {
    std::size_t count = 1;
    std::vector<std::vector<Rational>> ticks;
    for (const auto& ax : axes_) {
        if (ax.step <= 0 || ax.lo > ax.hi)
            throw InvalidInput("grid axis needs step > 0 and ordered bounds");
        std::vector<Rational> t;
        for (Rational v = ax.lo; v <= ax.hi; v += ax.step) t.push_back(v);
        count *= t.size();
        if (count > cap) throw Unsupported("grid-too-large");
        ticks.push_back(std::move(t));
    }
    points_.assign(1, Vec{});
    for (const auto& t : ticks) {
        std::vector<Vec> next;
        next.reserve(points_.size() * t.size());
        for (const auto& p : points_)
            for (const auto& v : t) {
                Vec q = p;
                q.push_back(v);
                next.push_back(std::move(q));
            }
        points_ = std::move(next);
    }
}

Grid Grid::symmetric(int dim, const Rational& extent, int steps_per_side,
                     std::size_t cap) {
    std::vector<GridAxis> axes(static_cast<std::size_t>(dim),
                               {-extent, extent, extent / steps_per_side});
    return Grid(std::move(axes), cap);
}

GradeTable oracle_membership(const StepFuzzySet& mu, const Grid& grid) {
    if (grid.dim() != mu.dim())
        throw InvalidInput("oracle_membership: dimension mismatch");
    GradeTable table;
    table.reserve(grid.points().size());
    for (const auto& p : grid.points())
        table.push_back({p, membership(mu, p)});
    return table;
}

std::vector<Grade> polar_theta_grid(const StepFuzzySet& mu) {
    std::vector<Grade> breaks{Grade(1)};
    for (const auto& lv : mu.levels()) {
        breaks.push_back(lv.grade);
        Grade c = Grade(1) - lv.grade;
        if (c > 0) breaks.push_back(c);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::vector<Grade> out;
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        if (i == 0) {
            if (breaks[i] > 0) out.push_back(breaks[i] / 2); // below the least
        } else {
            out.push_back((breaks[i - 1] + breaks[i]) / 2);
        }
        out.push_back(breaks[i]);
    }
    return out;
}

namespace {

// x' in the polar of the (1-theta)-cut, evaluated literally from the cut's
// vertex description; independent of the closed-form polar path.
bool cut_polar_contains(const StepFuzzySet& mu, const Grade& one_minus_theta,
                        const Vec& x_dual, const DualPair& pair) {
    auto bounded_by_one = [&](const std::vector<Vec>& verts) {
        for (const auto& v : verts)
            if (rational_abs(pair.apply(v, x_dual)) > 1) return false;
        return true;
    };
    auto zero_functional = [&] {
        for (int i = 0; i < mu.dim(); ++i) {
            Vec e = zero_vec(mu.dim());
            e[static_cast<std::size_t>(i)] = 1;
            if (pair.apply(e, x_dual) != 0) return false;
        }
        return true;
    };
    if (one_minus_theta <= 0) {
        // Cut is the whole space; its polar holds only the zero functional.
        return zero_functional();
    }
    Region cut = level_set(mu, one_minus_theta);
    auto convex_contains = [&](const Region& m) {
        switch (m.kind) {
        case RegionKind::Empty:
            return true;
        case RegionKind::WholeSpace:
            return zero_functional();
        case RegionKind::Points:
        case RegionKind::VPolytope:
            return bounded_by_one(m.points);
        case RegionKind::HPolyhedron: {
            Generators g = generators(m);
            if (!bounded_by_one(g.points)) return false;
            for (const auto& d : g.rays)
                if (pair.apply(d, x_dual) != 0) return false;
            return true;
        }
        default:
            throw Unsupported("oracle_polar expects convex or union cuts");
        }
    };
    if (cut.kind == RegionKind::Union) {
        for (const auto& m : cut.members)
            if (!convex_contains(m)) return false;
        return true;
    }
    return convex_contains(cut);
}

} // namespace

GradeTable oracle_polar(const StepFuzzySet& mu, const Grid& dual_grid,
                        const std::vector<Grade>& theta_grid,
                        const DualPair& pair) {
    if (dual_grid.dim() != mu.dim())
        throw InvalidInput("oracle_polar: dimension mismatch");
    std::vector<Grade> thetas = theta_grid;
    std::sort(thetas.begin(), thetas.end());
    thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());
    for (const auto& t : thetas)
        if (t <= 0 || t > 1)
            throw InvalidInput("oracle_polar: theta grid must lie in (0,1]");

    GradeTable table;
    table.reserve(dual_grid.points().size());
    for (const auto& x : dual_grid.points()) {
        // The down-set is monotone: passing thetas form a prefix.
        std::size_t last_pass = thetas.size(); // none
        std::size_t first_fail = thetas.size();
        for (std::size_t i = 0; i < thetas.size(); ++i) {
            if (cut_polar_contains(mu, Grade(1) - thetas[i], x, pair)) {
                last_pass = i;
            } else {
                first_fail = i;
                break;
            }
        }
        Grade value = 0;
        if (last_pass != thetas.size()) {
            if (first_fail == thetas.size()) {
                value = thetas[last_pass];
            } else {
                // sup is one of the two neighbours; probe between them.
                Grade mid = (thetas[last_pass] + thetas[first_fail]) / 2;
                value = cut_polar_contains(mu, Grade(1) - mid, x, pair)
                            ? thetas[first_fail]
                            : thetas[last_pass];
            }
        }
        table.push_back({x, value});
    }
    return table;
}

GradeTable oracle_add(const StepFuzzySet& mu, const StepFuzzySet& eta,
                      const Grid& grid) {
    if (grid.dim() != mu.dim() || mu.dim() != eta.dim())
        throw InvalidInput("oracle_add: dimension mismatch");
    const auto& pts = grid.points();
    GradeTable table;
    table.reserve(pts.size());
    for (const auto& x : pts) {
        Grade best = 0;
        for (const auto& x1 : pts) {
            Grade m1 = membership(mu, x1);
            if (m1 <= best) continue;
            Grade m2 = membership(eta, vec_sub(x, x1));
            Grade v = std::min(m1, m2);
            if (v > best) best = v;
        }
        table.push_back({x, best});
    }
    return table;
}

CompareReport compare(const StepFuzzySet& exact, const GradeTable& table) {
    CompareReport report;
    for (const auto& entry : table) {
        if (static_cast<int>(entry.point.size()) != exact.dim())
            throw InvalidInput("compare: dimension mismatch");
        if (membership(exact, entry.point) != entry.grade)
            report.differences.push_back(entry);
    }
    return report;
}

} // namespace fuzzpolar
