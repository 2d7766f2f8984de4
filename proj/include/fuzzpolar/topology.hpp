#ifndef FUZZPOLAR_TOPOLOGY_HPP
#define FUZZPOLAR_TOPOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "fuzzpolar/dual_pair.hpp"
#include "fuzzpolar/fuzzy_set.hpp"
#include "fuzzpolar/polar.hpp"

namespace fuzzpolar {

// Finite scale lattice {±2^e : exp_lo <= e <= exp_hi} used wherever an
// existential over all nonzero reals has to be searched.
struct ScaleSearch {
    int exp_lo = -8;
    int exp_hi = 8;
    std::vector<Rational> scales() const;          // positive powers only
    std::vector<Rational> signed_scales() const;   // positive and negative
};

// A generator list for a collection of weakly bounded fuzzy sets, closed
// under nonzero scaling by construction.
struct FuzzyCollection {
    DualPair pair;
    std::vector<StepFuzzySet> generators;
    bool scaling_closure = true;

    FuzzyCollection(DualPair p, std::vector<StepFuzzySet> gens);
};

struct C1Record {
    std::size_t first = 0, second = 0;
    bool satisfied = false;
    std::size_t dominating_index = 0;
    Rational dominating_scale;
    bool strict = false;   // dominance was strict, not mere equality
    bool via_join = false; // witnessed by the pair's own join (C = A u B at
                           // the max grade), not by a single scaled generator
};

struct C3Record {
    Vec basis_vector;
    bool satisfied = false;
    std::size_t witness_index = 0;
    Grade witness_grade;
};

struct BaseReport {
    std::vector<C1Record> c1;
    bool c2_by_construction = false;
    std::vector<C3Record> c3;
    bool c1_strictness_warning = false; // some pair only dominated non-strictly
    bool overall = false;
};

struct MackeyNeighborhoodRecord {
    bool preconditions_ok = false; // closed, absolutely convex, value 1 at 0
    bool is_closed_ac = false;
    bool bipolar_equal = false;
    bool polar_weakly_compact = false;
    std::string error; // geometry errors, recorded not thrown
    bool pass() const { return error.empty() && is_closed_ac && bipolar_equal && polar_weakly_compact; }
};

struct MackeyFunctionalRecord {
    Vec functional;
    std::optional<std::pair<std::size_t, Grade>> witness;
};

struct MackeyReport {
    std::vector<MackeyNeighborhoodRecord> neighborhoods;
    std::vector<MackeyFunctionalRecord> functionals;
    bool overall = false;
};

enum class WeakNbhdMode { Definition, PaperLiteral };

// Checks (c1)-(c3) on the generators against a spanning basis.
BaseReport validate_collection(const FuzzyCollection& b,
                               const std::vector<Vec>& basis,
                               const ScaleSearch& search = {});

// Polars of the generators; each is absolutely convex with value 1 at 0.
std::vector<StepFuzzySet> polar_base(const FuzzyCollection& b);

// Polar of the graded point set A_lambda. Definition mode follows the
// closed-form polar (grade 1 on the crisp polar of A, base grade
// 1 - lambda everywhere); paper-literal mode is lambda on the crisp polar
// of A and 0 elsewhere. The two differ whenever lambda < 1.
StepFuzzySet weak_neighborhood(const std::vector<Vec>& a, const Grade& lambda,
                               const DualPair& pair, WeakNbhdMode mode);

// A scale witness t > 0 with theta /\ (t eta) <= mu for every
// theta < mu(0), or nothing when no positive scale works.
std::optional<Rational> absorbs(const StepFuzzySet& mu, const StepFuzzySet& eta);

// eta is absorbed by every element of the base.
bool is_bounded_wrt(const StepFuzzySet& eta,
                    const std::vector<StepFuzzySet>& base);

// First base element whose polar is positive at x_dual.
std::optional<std::pair<std::size_t, Grade>>
dual_witness(const std::vector<StepFuzzySet>& base, const Vec& x_dual,
             const DualPair& pair);

// Every base2 neighborhood is matched below by a (scaled) base1 element.
bool refines(const std::vector<StepFuzzySet>& base1,
             const std::vector<StepFuzzySet>& base2,
             const ScaleSearch& search = {});

// Levelwise boundedness; in finite dimension this is exactly levelwise
// weak compactness (regions are closed by representation).
bool is_weakly_fuzzy_compact(const StepFuzzySet& mu);

MackeyReport verify_mackey_arens(const std::vector<StepFuzzySet>& base,
                                 const std::vector<Vec>& functionals,
                                 const DualPair& pair);

// aco of a bounded absorbing neighborhood; the returned set is a seminorm.
StepFuzzySet seminorm_from_bounded_nbhd(const StepFuzzySet& theta,
                                        const std::vector<StepFuzzySet>& base);

} // namespace fuzzpolar

#endif
