#include "fuzzpolar/polar.hpp"

#include "fuzzpolar/errors.hpp"

namespace fuzzpolar {

StepFuzzySet fuzzy_polar(const StepFuzzySet& mu, const DualPair& pair,
                         PairSide side) {
    const int n = mu.dim();
    if (n != pair.dim()) throw InvalidInput("fuzzy_polar: dimension mismatch");
    const auto& lvls = mu.levels();
    std::vector<Level> out;
    if (lvls.empty())
        return StepFuzzySet::crisp(Region::whole_space(n)); // empty-set polar
    const std::size_t k = lvls.size();
    if (lvls.back().grade < 1)
        out.push_back({Grade(1) - lvls.back().grade, Region::whole_space(n)});
    for (std::size_t i = k; i-- > 0;) {
        Grade below = i == 0 ? Grade(0) : lvls[i - 1].grade;
        out.push_back({Grade(1) - below, crisp_polar(lvls[i].region, pair, side)});
    }
    return StepFuzzySet::construct(n, std::move(out));
}

bool in_crisp_polar(const Region& r, const Vec& x_dual, const DualPair& pair,
                    PairSide side) {
    auto value = [&](const Vec& x) {
        return side == PairSide::Primal ? pair.apply(x, x_dual)
                                        : pair.apply(x_dual, x);
    };
    switch (r.kind) {
    case RegionKind::Empty:
        return true;
    case RegionKind::WholeSpace: {
        // Only the zero functional is bounded on E; nondegeneracy makes
        // x |-> <x, x'> zero exactly when x' = 0.
        for (int i = 0; i < r.dim; ++i) {
            Vec e = zero_vec(r.dim);
            e[static_cast<std::size_t>(i)] = 1;
            if (value(e) != 0) return false;
        }
        return true;
    }
    case RegionKind::Points:
    case RegionKind::VPolytope: {
        for (const auto& v : r.points)
            if (rational_abs(value(v)) > 1) return false;
        return true;
    }
    case RegionKind::HPolyhedron: {
        Generators g = generators(r);
        if (g.points.empty()) return true; // empty set
        for (const auto& v : g.points)
            if (rational_abs(value(v)) > 1) return false;
        for (const auto& d : g.rays)
            if (value(d) != 0) return false;
        return true;
    }
    case RegionKind::Union:
        for (const auto& m : r.members)
            if (!in_crisp_polar(m, x_dual, pair, side)) return false;
        return true;
    }
    return true;
}

Grade fuzzy_polar_at(const StepFuzzySet& mu, const Vec& x_dual,
                     const DualPair& pair, PairSide side) {
    if (static_cast<int>(x_dual.size()) != mu.dim())
        throw InvalidInput("fuzzy_polar_at: dimension mismatch");
    if (is_zero_vec(x_dual)) return 1;
    const auto& lvls = mu.levels();
    if (lvls.empty()) return 1;
    for (std::size_t i = 0; i < lvls.size(); ++i) {
        if (in_crisp_polar(lvls[i].region, x_dual, pair, side))
            return Grade(1) - (i == 0 ? Grade(0) : lvls[i - 1].grade);
    }
    return Grade(1) - lvls.back().grade;
}

StepFuzzySet bipolar(const StepFuzzySet& mu, const DualPair& pair) {
    return fuzzy_polar(fuzzy_polar(mu, pair, PairSide::Primal), pair,
                       PairSide::Dual);
}

StepFuzzySet polar_of_family(const std::vector<StepFuzzySet>& mus,
                             const DualPair& pair, PairSide side) {
    if (mus.empty()) throw InvalidInput("polar_of_family: empty family");
    StepFuzzySet acc = fuzzy_polar(mus[0], pair, side);
    for (std::size_t i = 1; i < mus.size(); ++i)
        acc = lattice_inf(acc, fuzzy_polar(mus[i], pair, side));
    return acc;
}

} // namespace fuzzpolar
