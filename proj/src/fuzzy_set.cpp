#include "fuzzpolar/fuzzy_set.hpp"

#include <algorithm>

#include "fuzzpolar/errors.hpp"

namespace fuzzpolar {

StepFuzzySet StepFuzzySet::construct(int dim, std::vector<Level> levels) {
    for (auto& lv : levels) {
        if (lv.grade <= 0 || lv.grade > 1)
            throw InvalidInput("invalid-grade: grade must lie in (0,1], got " +
                              format_rational(lv.grade));
        if (lv.region.dim != dim)
            throw InvalidInput("level region dimension mismatch");
        lv.region = canonicalize(lv.region);
    }
    std::erase_if(levels, [](const Level& lv) {
        return lv.region.kind == RegionKind::Empty;
    });
    std::stable_sort(levels.begin(), levels.end(),
                     [](const Level& a, const Level& b) { return a.grade < b.grade; });
    // Exact duplicates (grade, region) collapse; equal grades with different
    // regions are a malformed chain.
    levels.erase(std::unique(levels.begin(), levels.end(),
                             [](const Level& a, const Level& b) {
                                 return a.grade == b.grade &&
                                        compare_region(a.region, b.region) == 0;
                             }),
                 levels.end());
    for (std::size_t i = 1; i < levels.size(); ++i) {
        if (levels[i].grade == levels[i - 1].grade)
            throw InvalidInput("invalid-chain: duplicate grade " +
                              format_rational(levels[i].grade));
        if (!subset(levels[i].region, levels[i - 1].region))
            throw InvalidInput("invalid-chain: level regions are not nested");
    }
    return StepFuzzySet(dim, std::move(levels));
}

StepFuzzySet StepFuzzySet::crisp(Region b) {
    int dim = b.dim;
    return construct(dim, {{Grade(1), std::move(b)}});
}

StepFuzzySet StepFuzzySet::graded_points(int dim, std::vector<Vec> pts,
                                         const Grade& lambda) {
    return construct(dim, {{lambda, Region::make_points(dim, std::move(pts))}});
}

Grade membership(const StepFuzzySet& mu, const Vec& x) {
    const auto& lvls = mu.levels();
    for (auto it = lvls.rbegin(); it != lvls.rend(); ++it)
        if (contains_point(it->region, x)) return it->grade;
    return 0;
}

Region level_set(const StepFuzzySet& mu, const Grade& theta) {
    if (theta <= 0) return Region::whole_space(mu.dim());
    for (const auto& lv : mu.levels())
        if (lv.grade >= theta) return lv.region;
    return Region::empty(mu.dim());
}

std::vector<Grade> merged_grades(const StepFuzzySet& mu, const StepFuzzySet& eta) {
    std::vector<Grade> g;
    for (const auto& lv : mu.levels()) g.push_back(lv.grade);
    for (const auto& lv : eta.levels()) g.push_back(lv.grade);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

namespace {

template <typename F>
StepFuzzySet levelwise(const StepFuzzySet& mu, const StepFuzzySet& eta, F&& op) {
    if (mu.dim() != eta.dim())
        throw InvalidInput("operand dimension mismatch");
    std::vector<Level> out;
    for (const auto& g : merged_grades(mu, eta))
        out.push_back({g, op(level_set(mu, g), level_set(eta, g))});
    return StepFuzzySet::construct(mu.dim(), std::move(out));
}

} // namespace

StepFuzzySet lattice_sup(const StepFuzzySet& mu, const StepFuzzySet& eta) {
    return levelwise(mu, eta, [](const Region& a, const Region& b) {
        return canonicalize(Region::make_union(a.dim, {a, b}));
    });
}

StepFuzzySet lattice_inf(const StepFuzzySet& mu, const StepFuzzySet& eta) {
    return levelwise(mu, eta, [](const Region& a, const Region& b) {
        return intersect_regions(a, b);
    });
}

StepFuzzySet add(const StepFuzzySet& mu, const StepFuzzySet& eta) {
    return levelwise(mu, eta, [](const Region& a, const Region& b) {
        if (a.kind == RegionKind::Empty || b.kind == RegionKind::Empty)
            return Region::empty(a.dim);
        return minkowski_sum(a, b);
    });
}

StepFuzzySet scalar_mul(const Rational& t, const StepFuzzySet& mu) {
    if (t == 0) {
        if (mu.empty_chain()) return mu;
        return StepFuzzySet::construct(
            mu.dim(), {{mu.top_grade(), Region::origin(mu.dim())}});
    }
    std::vector<Level> out;
    for (const auto& lv : mu.levels()) out.push_back({lv.grade, scale(t, lv.region)});
    return StepFuzzySet::construct(mu.dim(), std::move(out));
}

namespace {

bool level_balanced(const Region& r) {
    switch (r.kind) {
    case RegionKind::Empty:
        return true;
    case RegionKind::WholeSpace:
        return true;
    case RegionKind::Points:
        // t A subseteq A for all |t| <= 1 forces A = {0}.
        return r.points.size() == 1 && is_zero_vec(r.points[0]);
    case RegionKind::VPolytope:
    case RegionKind::HPolyhedron:
        return contains_point(r, zero_vec(r.dim)) &&
               region_equal(scale(Rational(-1), r), r);
    case RegionKind::Union:
        // Non-convex unions would need tR subseteq R for all |t| <= 1;
        // conservatively false, matching the Points treatment.
        return false;
    }
    return false;
}

bool level_convex(const Region& r) {
    switch (r.kind) {
    case RegionKind::Empty:
    case RegionKind::WholeSpace:
    case RegionKind::VPolytope:
    case RegionKind::HPolyhedron:
        return true;
    case RegionKind::Points:
        return r.points.size() == 1;
    case RegionKind::Union:
        return is_bounded(r) && region_equal(r, convex_hull(r));
    }
    return false;
}

} // namespace

bool predicate(PredicateKind kind, const StepFuzzySet& mu) {
    switch (kind) {
    case PredicateKind::Balanced:
        for (const auto& lv : mu.levels())
            if (!level_balanced(lv.region)) return false;
        return true;
    case PredicateKind::Convex:
        for (const auto& lv : mu.levels())
            if (!level_convex(lv.region)) return false;
        return true;
    case PredicateKind::AbsolutelyConvex:
        return predicate(PredicateKind::Balanced, mu) &&
               predicate(PredicateKind::Convex, mu);
    case PredicateKind::Absorbing:
        return membership(mu, zero_vec(mu.dim())) == 1;
    case PredicateKind::Seminorm:
        return predicate(PredicateKind::AbsolutelyConvex, mu) &&
               predicate(PredicateKind::Absorbing, mu);
    case PredicateKind::WeaklyBounded:
        for (const auto& lv : mu.levels())
            if (!is_bounded(lv.region)) return false;
        return true;
    case PredicateKind::Closed:
        return true; // every representable region is closed
    }
    return false;
}

StepFuzzySet envelope(EnvelopeKind kind, const StepFuzzySet& mu) {
    if (kind == EnvelopeKind::Closure) return mu;
    std::vector<Level> out;
    for (const auto& lv : mu.levels()) {
        Region hull = kind == EnvelopeKind::Convex ? convex_hull(lv.region)
                                                   : abs_convex_hull(lv.region);
        out.push_back({lv.grade, std::move(hull)});
    }
    return StepFuzzySet::construct(mu.dim(), std::move(out));
}

StepFuzzySet pushforward(const Mat& m, const StepFuzzySet& mu) {
    std::vector<Level> out;
    for (const auto& lv : mu.levels())
        out.push_back({lv.grade, linear_image(m, lv.region)});
    return StepFuzzySet::construct(static_cast<int>(m.size()), std::move(out));
}

bool pointwise_leq(const StepFuzzySet& mu, const StepFuzzySet& eta) {
    if (mu.dim() != eta.dim())
        throw InvalidInput("operand dimension mismatch");
    for (const auto& lv : mu.levels())
        if (!subset(lv.region, level_set(eta, lv.grade))) return false;
    return true;
}

bool chain_equal(const StepFuzzySet& mu, const StepFuzzySet& eta) {
    if (mu.dim() != eta.dim() || mu.levels().size() != eta.levels().size())
        return false;
    for (std::size_t i = 0; i < mu.levels().size(); ++i) {
        if (mu.levels()[i].grade != eta.levels()[i].grade) return false;
        if (!region_equal(mu.levels()[i].region, eta.levels()[i].region))
            return false;
    }
    return true;
}

bool fuzzy_equal(const StepFuzzySet& mu, const StepFuzzySet& eta) {
    return pointwise_leq(mu, eta) && pointwise_leq(eta, mu);
}

} // namespace fuzzpolar
