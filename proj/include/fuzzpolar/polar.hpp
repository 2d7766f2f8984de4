#ifndef FUZZPOLAR_POLAR_HPP
#define FUZZPOLAR_POLAR_HPP

#include "fuzzpolar/dual_pair.hpp"
#include "fuzzpolar/fuzzy_set.hpp"

namespace fuzzpolar {

// The fuzzy polar in closed form. For a chain with grades
// 0 = theta_0 < theta_1 < ... < theta_k and regions R_1 >= ... >= R_k,
// the polar is the chain
//   (1 - theta_k, E')   [omitted when theta_k = 1]
//   (1 - theta_{i-1}, R_i polar)   for i = k..1.
// Conventions: empty-set polar = E', [mu]_alpha = E for alpha <= 0,
// E polar = {0}, sup of the empty down-set = 0.
StepFuzzySet fuzzy_polar(const StepFuzzySet& mu, const DualPair& pair,
                         PairSide side = PairSide::Primal);

// Direct sup-of-down-set evaluation at one dual vector; cross-check for
// the closed form. Always 1 at the zero functional.
Grade fuzzy_polar_at(const StepFuzzySet& mu, const Vec& x_dual,
                     const DualPair& pair, PairSide side = PairSide::Primal);

// fuzzy_polar twice; equals mu exactly for closed absolutely convex mu
// with membership 1 at 0.
StepFuzzySet bipolar(const StepFuzzySet& mu, const DualPair& pair);

// Meet of the member polars; equals the polar of the family's join.
StepFuzzySet polar_of_family(const std::vector<StepFuzzySet>& mus,
                             const DualPair& pair,
                             PairSide side = PairSide::Primal);

// Membership of x_dual in the crisp polar of r, decided from generators
// without constructing the polar region.
bool in_crisp_polar(const Region& r, const Vec& x_dual, const DualPair& pair,
                    PairSide side = PairSide::Primal);

} // namespace fuzzpolar

#endif
