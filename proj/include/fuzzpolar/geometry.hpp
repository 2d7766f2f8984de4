#ifndef FUZZPOLAR_GEOMETRY_HPP
#define FUZZPOLAR_GEOMETRY_HPP

#include <optional>

#include "fuzzpolar/dual_pair.hpp"
#include "fuzzpolar/region.hpp"

namespace fuzzpolar {

// Exact crisp convex geometry in dimension n <= 4.

inline constexpr int kMaxDimension = 4;

// Canonical representative; idempotent and membership-preserving.
Region canonicalize(const Region& r);

// Membership-equivalent region in the requested representation.
// H -> V requires boundedness (use generators() for the unbounded case).
Region convert(const Region& r, RepKind target);

// Vertex/ray description of a convex (non-Union) region. Works for
// unbounded H-polyhedra; lineality is returned as opposite ray pairs.
Generators generators(const Region& r);

bool contains_point(const Region& r, const Vec& x);

// Exact a subseteq b for every variant combination, including convex
// sets against finite unions.
bool subset(const Region& a, const Region& b);

bool region_equal(const Region& a, const Region& b);

// Exact Minkowski sum of bounded regions. Point sets stay point sets and
// unions distribute, so the result is the set-theoretic sum, not its hull.
Region minkowski_sum(const Region& a, const Region& b);

// t = 0 collapses any nonempty region to {0}.
Region scale(const Rational& t, const Region& r);

// Exact intersection. Convex operands meet by halfspace concatenation;
// point sets filter by membership; unions distribute.
Region intersect_regions(const Region& a, const Region& b);

enum class PairSide { Primal, Dual };

// Absolute polar { y : sup_{x in r} |<x,y>| <= 1 } under the pairing.
// side says which side of the dual pair r lives on.
Region crisp_polar(const Region& r, const DualPair& pair,
                   PairSide side = PairSide::Primal);

Region convex_hull(const Region& r);
Region abs_convex_hull(const Region& r);

bool is_bounded(const Region& r);

// True iff some ball around 0 is contained in r.
bool zero_in_interior(const Region& r);

// Image under the m x n matrix M; r must be bounded.
Region linear_image(const Mat& m, const Region& r);

struct MaxScale {
    bool all_scales = false;     // every t >= 0 fits (e.g. inner = {0})
    std::optional<Rational> t;   // largest feasible t when one exists
};

// Largest t >= 0 with t*inner subseteq outer, or all_scales / none.
MaxScale max_scale_inside(const Region& inner, const Region& outer);

} // namespace fuzzpolar

#endif
