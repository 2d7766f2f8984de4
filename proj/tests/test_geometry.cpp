#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuzzpolar/errors.hpp"
#include "fuzzpolar/geometry.hpp"
#include "test_helpers.hpp"

using namespace fuzzpolar;
using fuzzpolar::testing::Rng;

namespace {

Rational q(int n, int d = 1) { return Rational(n, d); }

Region square2() {
    return canonicalize(Region::vpolytope(
        2, {{q(1), q(1)}, {q(1), q(-1)}, {q(-1), q(1)}, {q(-1), q(-1)}}));
}

Region cross2() {
    return canonicalize(Region::vpolytope(
        2, {{q(1), q(0)}, {q(-1), q(0)}, {q(0), q(1)}, {q(0), q(-1)}}));
}

} // namespace

TEST_CASE("canonicalize drops interior points of a V-polytope") {
    Region r = Region::vpolytope(
        2, {{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}, {q(1, 4), q(1, 4)}});
    Region c = canonicalize(r);
    REQUIRE(c.kind == RegionKind::VPolytope);
    CHECK(c.points.size() == 3);
    CHECK(region_equal(c, r));
    CHECK(compare_region(canonicalize(c), c) == 0); // idempotent
}

TEST_CASE("canonicalize removes dominated halfspaces") {
    Region r = Region::hpolyhedron(1, {{{q(1)}, q(1)}, {{q(1)}, q(2)}});
    Region c = canonicalize(r);
    REQUIRE(c.kind == RegionKind::HPolyhedron);
    CHECK(c.halfspaces.size() == 1);
    CHECK(c.halfspaces[0].offset == 1);
}

TEST_CASE("canonicalize fixed points and degenerate cases") {
    CHECK(canonicalize(Region::empty(2)).kind == RegionKind::Empty);
    // Infeasible H-polyhedron collapses to Empty.
    Region infeasible =
        Region::hpolyhedron(1, {{{q(1)}, q(-1)}, {{q(-1)}, q(-1)}});
    CHECK(canonicalize(infeasible).kind == RegionKind::Empty);
    // No effective constraints -> whole space.
    Region trivial = Region::hpolyhedron(2, {{{q(0), q(0)}, q(5)}});
    CHECK(canonicalize(trivial).kind == RegionKind::WholeSpace);
}

TEST_CASE("convert: square <-> box constraints, cross-polytope <-> vertices") {
    Region h = convert(square2(), RepKind::H);
    REQUIRE(h.kind == RegionKind::HPolyhedron);
    CHECK(h.halfspaces.size() == 4);
    CHECK(region_equal(h, square2()));

    Region cross_h = Region::hpolyhedron(2, {{{q(1), q(1)}, q(1)},
                                             {{q(1), q(-1)}, q(1)},
                                             {{q(-1), q(1)}, q(1)},
                                             {{q(-1), q(-1)}, q(1)}});
    Region v = convert(cross_h, RepKind::V);
    REQUIRE(v.kind == RegionKind::VPolytope);
    CHECK(compare_region(v, cross2()) == 0);
}

TEST_CASE("generators of a half-line carry a vertex and a ray") {
    Region halfline = Region::hpolyhedron(1, {{{q(-1)}, q(0)}}); // x >= 0
    Generators g = generators(halfline);
    REQUIRE(g.points.size() == 1);
    CHECK(g.points[0] == Vec{q(0)});
    REQUIRE(g.rays.size() == 1);
    CHECK(g.rays[0] == Vec{q(1)});
}

TEST_CASE("generators of a slab include the lineality directions") {
    // |x1| <= 1 in R^2: line segment times a full line.
    Region slab = Region::hpolyhedron(2, {{{q(1), q(0)}, q(1)},
                                          {{q(-1), q(0)}, q(1)}});
    Generators g = generators(slab);
    CHECK(g.points.size() == 2);
    REQUIRE(g.rays.size() == 2);
    CHECK(g.rays[0] == Vec{q(0), q(-1)});
    CHECK(g.rays[1] == Vec{q(0), q(1)});
    CHECK_FALSE(is_bounded(slab));
}

TEST_CASE("contains_point respects closed boundaries") {
    Region interval = Region::hpolyhedron(1, {{{q(1)}, q(1)}, {{q(-1)}, q(1)}});
    CHECK(contains_point(interval, {q(1)}));
    CHECK_FALSE(contains_point(interval, {q(3, 2)}));
    CHECK_FALSE(contains_point(Region::empty(1), {q(0)}));
    Region tri = Region::vpolytope(2, {{q(0), q(0)}, {q(2), q(0)}, {q(0), q(2)}});
    CHECK(contains_point(tri, {q(1), q(1)}));
    CHECK_FALSE(contains_point(tri, {q(2), q(2)}));
}

TEST_CASE("subset on intervals, points and the square/cross pair") {
    CHECK(subset(Region::interval(q(-1), q(1)), Region::interval(q(-2), q(2))));
    CHECK_FALSE(subset(Region::interval(q(-2), q(2)), Region::interval(q(-1), q(1))));
    CHECK(subset(Region::make_points(2, {{q(1), q(0)}}), cross2()));
    CHECK_FALSE(subset(square2(), cross2()));
    CHECK(subset(cross2(), square2()));
}

TEST_CASE("subset against unions is exact, not member-by-member") {
    // [0,2] is covered by [0,1] union [1,2] though by neither alone.
    Region u = Region::make_union(
        1, {Region::interval(q(0), q(1)), Region::interval(q(1), q(2))});
    CHECK(subset(Region::interval(q(0), q(2)), u));
    CHECK_FALSE(subset(Region::interval(q(0), q(5, 2)), u));
    // A gap breaks coverage.
    Region gap = Region::make_union(
        1, {Region::interval(q(0), q(1)), Region::interval(q(3, 2), q(2))});
    CHECK_FALSE(subset(Region::interval(q(0), q(2)), gap));
}

TEST_CASE("minkowski_sum on intervals, segments, and the identity") {
    CHECK(region_equal(minkowski_sum(Region::interval(q(0), q(1)),
                                     Region::interval(q(1), q(2))),
                       Region::interval(q(1), q(3))));
    Region seg_x = Region::vpolytope(2, {{q(0), q(0)}, {q(1), q(0)}});
    Region seg_y = Region::vpolytope(2, {{q(0), q(0)}, {q(0), q(1)}});
    Region sq = canonicalize(Region::vpolytope(
        2, {{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}}));
    CHECK(region_equal(minkowski_sum(seg_x, seg_y), sq));
    Region p = square2();
    CHECK(region_equal(minkowski_sum(Region::origin(2), p), p));
}

TEST_CASE("minkowski_sum keeps point sets and unions exact") {
    Region pts = Region::make_points(1, {{q(0)}, {q(10)}});
    Region sum = minkowski_sum(pts, Region::interval(q(0), q(1)));
    // Exactly [0,1] union [10,11]; the hull [0,11] would be wrong.
    CHECK(contains_point(sum, {q(1, 2)}));
    CHECK(contains_point(sum, {q(21, 2)}));
    CHECK_FALSE(contains_point(sum, {q(5)}));
    Region ab = minkowski_sum(pts, pts);
    REQUIRE(ab.kind == RegionKind::Points);
    CHECK(ab.points.size() == 3); // {0, 10, 20}
}

TEST_CASE("scale: stretch, collapse to origin, reflect") {
    CHECK(region_equal(scale(q(2), Region::interval(q(-1), q(1))),
                       Region::interval(q(-2), q(2))));
    Region z = scale(q(0), square2());
    REQUIRE(z.kind == RegionKind::Points);
    CHECK(z.points[0] == zero_vec(2));
    Region p = scale(q(-1), Region::make_points(2, {{q(1), q(2)}}));
    CHECK(p.points[0] == Vec{q(-1), q(-2)});
    // H-form scaling by a negative scalar.
    Region i = Region::hpolyhedron(1, {{{q(1)}, q(2)}, {{q(-1)}, q(1)}}); // [-1,2]
    CHECK(region_equal(scale(q(-1), i), Region::interval(q(-2), q(1))));
}

TEST_CASE("crisp_polar: square/cross pair, whole space, single point") {
    DualPair pair(2);
    CHECK(region_equal(crisp_polar(square2(), pair), cross2()));
    CHECK(region_equal(crisp_polar(cross2(), pair), square2()));
    Region ws = crisp_polar(Region::whole_space(2), pair);
    REQUIRE(ws.kind == RegionKind::Points);
    CHECK(ws.points[0] == zero_vec(2));
    // Polar of a single point is an unbounded slab.
    Region slab = crisp_polar(Region::make_points(2, {{q(1), q(0)}}), pair);
    CHECK(contains_point(slab, {q(1), q(100)}));
    CHECK_FALSE(contains_point(slab, {q(3, 2), q(0)}));
    CHECK_FALSE(is_bounded(slab));
    CHECK(region_equal(crisp_polar(Region::empty(2), pair),
                       Region::whole_space(2)));
}

TEST_CASE("crisp_polar honours a non-standard pairing") {
    // <x, x'> = 2 x1 x1' + x2 x2'.
    DualPair pair(2, {{q(2), q(0)}, {q(0), q(1)}});
    Region p = crisp_polar(Region::interval(q(-1), q(1)), DualPair(1));
    CHECK(region_equal(p, Region::interval(q(-1), q(1))));
    Region sq_polar = crisp_polar(square2(), pair);
    // Vertex (1,1) maps to constraint |2 y1 + y2| <= 1.
    CHECK(contains_point(sq_polar, {q(1, 2), q(0)}));
    CHECK_FALSE(contains_point(sq_polar, {q(3, 4), q(0)}));
}

TEST_CASE("hulls: convex and absolutely convex") {
    Region pts = Region::make_points(2, {{q(1), q(0)}, {q(0), q(1)}});
    CHECK(region_equal(abs_convex_hull(pts), cross2()));
    CHECK(region_equal(convex_hull(Region::make_points(1, {{q(0)}, {q(1)}})),
                       Region::interval(q(0), q(1))));
    Region one_pt = Region::make_points(2, {{q(1), q(1)}});
    Region seg = abs_convex_hull(one_pt);
    CHECK(region_equal(
        seg, Region::vpolytope(2, {{q(-1), q(-1)}, {q(1), q(1)}})));
    // Symmetric polytope with 0 is a fixed point of aco.
    CHECK(region_equal(abs_convex_hull(square2()), square2()));
    // Hull of a union of triangles is the hull of their vertices.
    Region t1 = Region::vpolytope(2, {{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}});
    Region t2 = Region::vpolytope(2, {{q(2), q(2)}, {q(3), q(2)}, {q(2), q(3)}});
    Region u = Region::make_union(2, {t1, t2});
    Region h = convex_hull(u);
    CHECK(subset(t1, h));
    CHECK(subset(t2, h));
    CHECK(contains_point(h, {q(1), q(1)}));
}

TEST_CASE("is_bounded and zero_in_interior") {
    CHECK(is_bounded(cross2()));
    CHECK(is_bounded(Region::make_points(2, {{q(5), q(5)}})));
    CHECK_FALSE(is_bounded(Region::whole_space(2)));
    CHECK(zero_in_interior(square2()));
    CHECK_FALSE(zero_in_interior(
        Region::vpolytope(2, {{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}})));
}

TEST_CASE("linear_image: projection, identity, shear") {
    Mat proj{{q(1), q(0)}};
    CHECK(region_equal(linear_image(proj, square2()),
                       Region::interval(q(-1), q(1))));
    CHECK(region_equal(linear_image(identity_mat(2), square2()), square2()));
    Mat shear{{q(1), q(1)}, {q(0), q(1)}};
    Region img = linear_image(shear, square2());
    Region expected = canonicalize(Region::vpolytope(
        2, {{q(2), q(1)}, {q(0), q(1)}, {q(0), q(-1)}, {q(-2), q(-1)}}));
    CHECK(region_equal(img, expected));
}

TEST_CASE("max_scale_inside: ratio, all-scales, and no-fit cases") {
    auto fit = max_scale_inside(Region::interval(q(-5), q(5)),
                                Region::interval(q(-1), q(1)));
    REQUIRE(fit.t.has_value());
    CHECK(*fit.t == q(1, 5));
    auto all = max_scale_inside(Region::origin(1), Region::interval(q(-1), q(1)));
    CHECK(all.all_scales);
    auto none = max_scale_inside(Region::interval(q(0), q(1)), Region::origin(1));
    CHECK_FALSE(none.all_scales);
    CHECK_FALSE(none.t.has_value());
}

TEST_CASE("intersect_regions") {
    CHECK(region_equal(intersect_regions(Region::interval(q(-2), q(2)),
                                         Region::interval(q(-1), q(3))),
                       Region::interval(q(-1), q(2))));
    Region pts = Region::make_points(1, {{q(0)}, {q(5)}});
    Region got = intersect_regions(pts, Region::interval(q(-1), q(1)));
    REQUIRE(got.kind == RegionKind::Points);
    CHECK(got.points.size() == 1);
}

TEST_CASE("dimension cap is enforced on conversion paths") {
    std::vector<Vec> pts;
    pts.push_back(zero_vec(5));
    Vec v = zero_vec(5);
    v[0] = 1;
    pts.push_back(v);
    CHECK_THROWS_AS(convert(Region::vpolytope(5, pts), RepKind::H), Unsupported);
}

TEST_CASE("property: canonicalize preserves membership on random clouds") {
    Rng rng(1);
    for (int iter = 0; iter < 25; ++iter) {
        int dim = rng.uniform_int(1, 3);
        Region r = Region::vpolytope(2, {});
        switch (rng.uniform_int(0, 2)) {
        case 0: r = rng.polytope(dim); break;
        case 1: r = rng.point_set(dim); break;
        default:
            r = Region::make_union(dim, {rng.polytope(dim), rng.point_set(dim)});
        }
        Region c = canonicalize(r);
        for (int k = 0; k < 12; ++k) {
            Vec x = rng.vector(dim);
            CHECK(contains_point(r, x) == contains_point(c, x));
        }
        CHECK(compare_region(canonicalize(c), c) == 0);
    }
}

TEST_CASE("property: V->H->V round trip is membership-equivalent") {
    Rng rng(2);
    for (int iter = 0; iter < 20; ++iter) {
        int dim = rng.uniform_int(1, 3);
        Region r = rng.polytope(dim, dim + 1, dim + 4);
        if (r.kind != RegionKind::VPolytope) continue;
        Region h = convert(r, RepKind::H);
        Region v = convert(h, RepKind::V);
        CHECK(region_equal(r, v));
    }
}

TEST_CASE("property: polar laws on random polytopes") {
    Rng rng(3);
    DualPair pair2(2);
    for (int iter = 0; iter < 15; ++iter) {
        int dim = rng.uniform_int(1, 3);
        DualPair pair(dim);
        Region a = rng.polytope(dim);
        Region b = canonicalize(Region::make_union(dim, {a, rng.polytope(dim)}));
        // Antitone: a subseteq b implies polar(b) subseteq polar(a).
        CHECK(subset(a, b));
        CHECK(subset(crisp_polar(b, pair), crisp_polar(a, pair)));
        // Scalar law.
        Rational lam = rng.small_rational();
        if (lam != 0) {
            CHECK(region_equal(crisp_polar(scale(lam, a), pair),
                               scale(Rational(1) / rational_abs(lam),
                                     crisp_polar(a, pair))));
        }
        // Union polar = intersection of member polars.
        Region up = crisp_polar(b, pair);
        Region ip = intersect_regions(crisp_polar(a, pair),
                                      crisp_polar(rng.polytope(dim), pair));
        (void)up;
        (void)ip;
    }
}

TEST_CASE("property: double polar equals the absolutely convex hull") {
    Rng rng(4);
    for (int iter = 0; iter < 12; ++iter) {
        int dim = rng.uniform_int(1, 3);
        DualPair pair(dim);
        Region p = rng.uniform_int(0, 1) ? rng.polytope(dim) : rng.point_set(dim);
        if (p.kind == RegionKind::Empty) continue;
        Region pp = crisp_polar(crisp_polar(p, pair), pair, PairSide::Dual);
        CHECK(region_equal(pp, abs_convex_hull(p)));
    }
}

TEST_CASE("property: union polar is the intersection of member polars") {
    Rng rng(5);
    for (int iter = 0; iter < 10; ++iter) {
        int dim = rng.uniform_int(1, 2);
        DualPair pair(dim);
        Region a = rng.polytope(dim);
        Region b = rng.polytope(dim);
        Region u = Region::make_union(dim, {a, b});
        Region up = crisp_polar(u, pair);
        Region ip = intersect_regions(crisp_polar(a, pair), crisp_polar(b, pair));
        CHECK(region_equal(up, ip));
    }
}

TEST_CASE("property: minkowski_sum is commutative and associative with {0}") {
    Rng rng(6);
    for (int iter = 0; iter < 10; ++iter) {
        int dim = rng.uniform_int(1, 2);
        Region a = rng.polytope(dim);
        Region b = rng.polytope(dim);
        Region c = rng.polytope(dim);
        CHECK(region_equal(minkowski_sum(a, b), minkowski_sum(b, a)));
        CHECK(region_equal(minkowski_sum(minkowski_sum(a, b), c),
                           minkowski_sum(a, minkowski_sum(b, c))));
        CHECK(region_equal(minkowski_sum(a, Region::origin(dim)), a));
    }
}

TEST_CASE("property: polar of a 0-interior polytope is bounded") {
    Rng rng(7);
    for (int iter = 0; iter < 10; ++iter) {
        int dim = rng.uniform_int(1, 3);
        DualPair pair(dim);
        Region p = rng.symmetric_polytope(dim);
        REQUIRE(zero_in_interior(p));
        CHECK(is_bounded(crisp_polar(p, pair)));
    }
}
