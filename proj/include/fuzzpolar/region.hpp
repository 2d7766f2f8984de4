#ifndef FUZZPOLAR_REGION_HPP
#define FUZZPOLAR_REGION_HPP

#include <vector>

#include "fuzzpolar/linalg.hpp"

namespace fuzzpolar {

// Closed halfspace { x : normal . x <= offset }.
// Canonical form: normal has coprime integer entries.
struct Halfspace {
    Vec normal;
    Rational offset;

    friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

enum class RegionKind { Empty, WholeSpace, Points, VPolytope, HPolyhedron, Union };

// Tagged crisp subset of R^n. All representable regions are closed.
// Canonical invariants (established by canonicalize):
//   Points:      nonempty, deduplicated, lexicographically sorted
//   VPolytope:   pairwise distinct extreme points, sorted
//   HPolyhedron: irredundant, halfspaces canonical and sorted
//   Union:       members non-Empty, non-Union, none contained in another
struct Region {
    RegionKind kind = RegionKind::Empty;
    int dim = 0;
    std::vector<Vec> points;           // Points, VPolytope
    std::vector<Halfspace> halfspaces; // HPolyhedron
    std::vector<Region> members;       // Union

    static Region empty(int n);
    static Region whole_space(int n);
    static Region make_points(int n, std::vector<Vec> pts);
    static Region vpolytope(int n, std::vector<Vec> vertices);
    static Region hpolyhedron(int n, std::vector<Halfspace> hs);
    static Region make_union(int n, std::vector<Region> members);

    // Singleton {0}.
    static Region origin(int n);
    // Axis-aligned box [lo_1,hi_1] x ... as a V-polytope.
    static Region box(const Vec& lo, const Vec& hi);
    // [lo, hi] in R^1.
    static Region interval(const Rational& lo, const Rational& hi);
};

// V-style description of a (possibly unbounded) convex region:
// conv(points) + cone(rays). Lineality shows up as opposite ray pairs.
struct Generators {
    std::vector<Vec> points;
    std::vector<Vec> rays;
};

enum class RepKind { V, H };

// Total order used for canonical sorting; not geometrically meaningful.
int compare_region(const Region& a, const Region& b);
int compare_halfspace(const Halfspace& a, const Halfspace& b);

} // namespace fuzzpolar

#endif
