#ifndef FUZZPOLAR_FUZZY_SET_HPP
#define FUZZPOLAR_FUZZY_SET_HPP

#include <vector>

#include "fuzzpolar/geometry.hpp"
#include "fuzzpolar/region.hpp"

namespace fuzzpolar {

// Membership grade in [0,1]; grades stored in chains are in (0,1].
using Grade = Rational;

struct Level {
    Grade grade;
    Region region;
};

// A fuzzy set with finitely many membership values, stored as its chain of
// theta-cuts: grades strictly increasing in (0,1], regions nested
// non-increasing. membership(x) = max{ grade_i : x in region_i }, else 0.
//
// Distinct grades carrying equal regions are kept: the polar's grade
// arithmetic reads the exact grade list.
class StepFuzzySet {
public:
    // Validates grades, drops empty regions, rejects non-nested chains.
    static StepFuzzySet construct(int dim, std::vector<Level> levels);

    // chi_B: the crisp set B at grade 1.
    static StepFuzzySet crisp(Region b);

    // A_lambda: grade lambda on the finite point set A, 0 elsewhere.
    static StepFuzzySet graded_points(int dim, std::vector<Vec> pts,
                                      const Grade& lambda);

    int dim() const { return dim_; }
    const std::vector<Level>& levels() const { return levels_; }
    bool empty_chain() const { return levels_.empty(); }
    Grade top_grade() const { return levels_.empty() ? Grade(0) : levels_.back().grade; }

private:
    StepFuzzySet(int dim, std::vector<Level> levels)
        : dim_(dim), levels_(std::move(levels)) {}
    int dim_;
    std::vector<Level> levels_;
};

enum class PredicateKind {
    Balanced,
    Convex,
    AbsolutelyConvex,
    Absorbing,
    Seminorm,
    WeaklyBounded,
    Closed,
};

enum class EnvelopeKind { Convex, AbsolutelyConvex, Closure };

Grade membership(const StepFuzzySet& mu, const Vec& x);

// [mu]_theta. theta <= 0 returns the whole space; above the top grade, Empty.
Region level_set(const StepFuzzySet& mu, const Grade& theta);

// Grades of both operands, merged and deduplicated, ascending.
std::vector<Grade> merged_grades(const StepFuzzySet& mu, const StepFuzzySet& eta);

StepFuzzySet lattice_sup(const StepFuzzySet& mu, const StepFuzzySet& eta);
StepFuzzySet lattice_inf(const StepFuzzySet& mu, const StepFuzzySet& eta);

// Levelwise Minkowski sum over the merged grade lattice; exact sup-min
// semantics for step sets.
StepFuzzySet add(const StepFuzzySet& mu, const StepFuzzySet& eta);

StepFuzzySet scalar_mul(const Rational& t, const StepFuzzySet& mu);

bool predicate(PredicateKind kind, const StepFuzzySet& mu);

StepFuzzySet envelope(EnvelopeKind kind, const StepFuzzySet& mu);

// Image under the linear map M (rows x dim matrix).
StepFuzzySet pushforward(const Mat& m, const StepFuzzySet& mu);

// mu <= eta pointwise, decided exactly through the grade lattice.
bool pointwise_leq(const StepFuzzySet& mu, const StepFuzzySet& eta);

// Same grades, membership-equal regions level by level.
bool chain_equal(const StepFuzzySet& mu, const StepFuzzySet& eta);

// Equality as functions (mutual pointwise <=).
bool fuzzy_equal(const StepFuzzySet& mu, const StepFuzzySet& eta);

} // namespace fuzzpolar

#endif
