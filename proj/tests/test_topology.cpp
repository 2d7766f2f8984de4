#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fuzzpolar/errors.hpp"
#include "fuzzpolar/topology.hpp"
#include "test_helpers.hpp"

using namespace fuzzpolar;
using fuzzpolar::testing::Rng;

namespace {

Rational q(int n, int d = 1) { return Rational(n, d); }

Vec e1_2() { return {q(1), q(0)}; }
Vec e2_2() { return {q(0), q(1)}; }

Region square2() {
    return Region::vpolytope(
        2, {{q(1), q(1)}, {q(1), q(-1)}, {q(-1), q(1)}, {q(-1), q(-1)}});
}

Region cross2() {
    return Region::vpolytope(
        2, {{q(1), q(0)}, {q(-1), q(0)}, {q(0), q(1)}, {q(0), q(-1)}});
}

} // namespace

TEST_CASE("ScaleSearch enumerates signed powers of two") {
    ScaleSearch s{-2, 2};
    auto pos = s.scales();
    REQUIRE(pos.size() == 5);
    CHECK(pos.front() == q(1, 4));
    CHECK(pos.back() == q(4));
    CHECK(s.signed_scales().size() == 10);
}

TEST_CASE("FuzzyCollection validates its generators") {
    DualPair pair(1);
    CHECK_NOTHROW(FuzzyCollection(
        pair, {StepFuzzySet::crisp(Region::interval(q(-1), q(1)))}));
    CHECK_THROWS_AS(FuzzyCollection(pair, {}), InvalidInput);
    CHECK_THROWS_AS(
        FuzzyCollection(pair, {StepFuzzySet::crisp(Region::whole_space(1))}),
        InvalidInput);
}

TEST_CASE("validate_collection: graded point sets and the union witness") {
    DualPair pair(2);
    FuzzyCollection b(pair,
                      {StepFuzzySet::graded_points(2, {e1_2()}, q(1, 2)),
                       StepFuzzySet::graded_points(2, {e2_2()}, q(1))});
    auto rep = validate_collection(b, {e1_2(), e2_2()});
    CHECK(rep.overall);
    CHECK(rep.c2_by_construction);
    for (const auto& r : rep.c1) CHECK(r.satisfied);
    for (const auto& r : rep.c3) CHECK(r.satisfied);
    // The cross pair is only dominated by the union witness C at grade
    // max(1/2, 1), and that dominance is non-strict.
    bool saw_join = false;
    for (const auto& r : rep.c1)
        if (r.first != r.second) saw_join = saw_join || r.via_join;
    CHECK(saw_join);
    CHECK(rep.c1_strictness_warning);
}

TEST_CASE("validate_collection: single crisp interval generator") {
    DualPair pair(1);
    FuzzyCollection b(pair, {StepFuzzySet::crisp(Region::interval(q(-1), q(1)))});
    auto rep = validate_collection(b, {Vec{q(1)}});
    CHECK(rep.overall);
}

TEST_CASE("validate_collection: c3 fails off the generator support") {
    DualPair pair(2);
    FuzzyCollection b(pair, {StepFuzzySet::graded_points(2, {e1_2()}, q(1, 2))});
    auto rep = validate_collection(b, {e1_2(), e2_2()});
    CHECK_FALSE(rep.overall);
    REQUIRE(rep.c3.size() == 2);
    CHECK(rep.c3[0].satisfied);
    CHECK_FALSE(rep.c3[1].satisfied);
}

TEST_CASE("validate_collection rejects a non-spanning basis") {
    DualPair pair(2);
    FuzzyCollection b(pair, {StepFuzzySet::graded_points(2, {e1_2()}, q(1))});
    CHECK_THROWS_WITH_AS(validate_collection(b, {e1_2()}),
                         doctest::Contains("invalid-basis"), InvalidInput);
}

TEST_CASE("polar_base: self-polar interval and the square/cross pair") {
    DualPair pair1(1);
    FuzzyCollection b1(pair1, {StepFuzzySet::crisp(Region::interval(q(-1), q(1)))});
    auto base1 = polar_base(b1);
    REQUIRE(base1.size() == 1);
    CHECK(fuzzy_equal(base1[0],
                      StepFuzzySet::crisp(Region::interval(q(-1), q(1)))));

    DualPair pair2(2);
    FuzzyCollection b2(pair2, {StepFuzzySet::crisp(square2())});
    auto base2 = polar_base(b2);
    REQUIRE(base2.size() == 1);
    CHECK(fuzzy_equal(base2[0], StepFuzzySet::crisp(cross2())));
    for (const auto& nu : base2) {
        CHECK(predicate(PredicateKind::AbsolutelyConvex, nu));
        CHECK(membership(nu, zero_vec(2)) == 1);
    }
}

TEST_CASE("weak_neighborhood: the two modes and their coincidence at lambda=1") {
    DualPair pair(2);
    Region slab = Region::hpolyhedron(2, {{{q(1), q(0)}, q(1)},
                                          {{q(-1), q(0)}, q(1)}});
    auto lit = weak_neighborhood({e1_2()}, q(1, 2), pair, WeakNbhdMode::PaperLiteral);
    REQUIRE(lit.levels().size() == 1);
    CHECK(lit.levels()[0].grade == q(1, 2));
    CHECK(region_equal(lit.levels()[0].region, slab));

    auto def = weak_neighborhood({e1_2()}, q(1, 2), pair, WeakNbhdMode::Definition);
    REQUIRE(def.levels().size() == 2);
    CHECK(def.levels()[0].grade == q(1, 2));
    CHECK(def.levels()[0].region.kind == RegionKind::WholeSpace);
    CHECK(def.levels()[1].grade == 1);
    CHECK(region_equal(def.levels()[1].region, slab));
    CHECK_FALSE(fuzzy_equal(lit, def));
    // Definition mode is exactly the closed-form polar of A_lambda.
    CHECK(fuzzy_equal(
        def, fuzzy_polar(StepFuzzySet::graded_points(2, {e1_2()}, q(1, 2)), pair)));

    auto a1 = weak_neighborhood({e1_2()}, q(1), pair, WeakNbhdMode::Definition);
    auto b1 = weak_neighborhood({e1_2()}, q(1), pair, WeakNbhdMode::PaperLiteral);
    CHECK(fuzzy_equal(a1, b1));
    CHECK(fuzzy_equal(a1, StepFuzzySet::crisp(slab)));
}

TEST_CASE("absorbs: ratio witness, impossible case, degenerate inner set") {
    auto mu = StepFuzzySet::crisp(Region::interval(q(-1), q(1)));
    auto eta = StepFuzzySet::crisp(Region::interval(q(-5), q(5)));
    auto t = absorbs(mu, eta);
    REQUIRE(t.has_value());
    CHECK(*t == q(1, 5));

    auto tiny = StepFuzzySet::crisp(Region::origin(1));
    CHECK_FALSE(absorbs(tiny, StepFuzzySet::crisp(Region::interval(q(0), q(1))))
                    .has_value());
    auto any = absorbs(mu, tiny);
    REQUIRE(any.has_value());
    CHECK(*any == 1);
}

TEST_CASE("absorbs witness is valid levelwise") {
    Rng rng(31);
    for (int iter = 0; iter < 10; ++iter) {
        int dim = rng.uniform_int(1, 2);
        auto mu = rng.abs_convex_set(dim);
        auto eta = rng.step_set(dim, 2);
        if (!predicate(PredicateKind::WeaklyBounded, eta)) continue;
        auto t = absorbs(mu, eta);
        if (!t) continue;
        Grade mu0 = membership(mu, zero_vec(dim));
        for (const auto& lv : eta.levels()) {
            Grade g = std::min(lv.grade, mu0);
            CHECK(subset(scale(*t, lv.region), level_set(mu, g)));
        }
    }
}

TEST_CASE("is_bounded_wrt") {
    auto unit = StepFuzzySet::crisp(Region::interval(q(-1), q(1)));
    CHECK(is_bounded_wrt(StepFuzzySet::crisp(Region::interval(q(-5), q(5))), {unit}));
    CHECK(is_bounded_wrt(StepFuzzySet::crisp(Region::origin(1)), {unit}));
    auto ray = StepFuzzySet::crisp(Region::hpolyhedron(1, {{{q(-1)}, q(0)}}));
    CHECK_FALSE(is_bounded_wrt(ray, {unit}));
}

TEST_CASE("dual_witness") {
    DualPair pair1(1);
    auto unit = StepFuzzySet::crisp(Region::interval(q(-1), q(1)));
    CHECK_FALSE(dual_witness({unit}, {q(3)}, pair1).has_value());
    auto w = dual_witness({unit}, {q(1, 2)}, pair1);
    REQUIRE(w.has_value());
    CHECK(w->first == 0);
    CHECK(w->second == 1);

    DualPair pair2(2);
    auto boxes = StepFuzzySet::construct(
        2, {{q(1, 2), scale(q(2), square2())}, {q(1), square2()}});
    // Adding elements to the base never loses a witness.
    auto w1 = dual_witness({boxes}, {q(1, 4), q(0)}, pair2);
    REQUIRE(w1.has_value());
    auto w2 = dual_witness({StepFuzzySet::crisp(Region::origin(2)), boxes},
                           {q(1, 4), q(0)}, pair2);
    CHECK(w2.has_value());
}

TEST_CASE("refines: reflexive, nested intervals, polar base vs weak base") {
    auto unit = StepFuzzySet::crisp(Region::interval(q(-1), q(1)));
    auto wide = StepFuzzySet::crisp(Region::interval(q(-2), q(2)));
    CHECK(refines({unit}, {unit}));
    CHECK(refines({unit}, {wide}));
    // Scaled base1 elements count: wide/2 = unit, so this also refines.
    CHECK(refines({wide}, {unit}));
    // A slab never fits inside the square at any scale.
    DualPair pair0(2);
    std::vector<StepFuzzySet> slab_base{
        weak_neighborhood({e1_2()}, q(1), pair0, WeakNbhdMode::Definition)};
    CHECK_FALSE(refines(slab_base, {StepFuzzySet::crisp(square2())}));

    DualPair pair(2);
    FuzzyCollection b(pair, {StepFuzzySet::crisp(square2())});
    auto pbase = polar_base(b);
    std::vector<StepFuzzySet> weak_base{
        weak_neighborhood({e1_2()}, q(1), pair, WeakNbhdMode::Definition),
        weak_neighborhood({e2_2()}, q(1), pair, WeakNbhdMode::Definition)};
    CHECK(refines(pbase, weak_base));
}

TEST_CASE("is_weakly_fuzzy_compact") {
    DualPair pair(2);
    CHECK(is_weakly_fuzzy_compact(
        fuzzy_polar(StepFuzzySet::crisp(square2()), pair)));
    CHECK_FALSE(is_weakly_fuzzy_compact(
        weak_neighborhood({e1_2()}, q(1, 2), pair, WeakNbhdMode::Definition)));
    CHECK(is_weakly_fuzzy_compact(StepFuzzySet::crisp(Region::origin(2))));
}

TEST_CASE("verify_mackey_arens: square and cross-polytope base passes") {
    DualPair pair(2);
    std::vector<StepFuzzySet> base{StepFuzzySet::crisp(square2()),
                                   StepFuzzySet::crisp(cross2())};
    auto rep = verify_mackey_arens(base, {e1_2(), e2_2()}, pair);
    CHECK(rep.overall);
    REQUIRE(rep.neighborhoods.size() == 2);
    for (const auto& r : rep.neighborhoods) CHECK(r.pass());
    REQUIRE(rep.functionals.size() == 2);
    for (const auto& f : rep.functionals) CHECK(f.witness.has_value());
}

TEST_CASE("verify_mackey_arens: corrupted triangle flips its record") {
    DualPair pair(2);
    Region triangle =
        Region::vpolytope(2, {{q(0), q(0)}, {q(1), q(0)}, {q(0), q(1)}});
    std::vector<StepFuzzySet> base{StepFuzzySet::crisp(square2()),
                                   StepFuzzySet::crisp(triangle)};
    auto rep = verify_mackey_arens(base, {e1_2()}, pair);
    CHECK_FALSE(rep.overall);
    REQUIRE(rep.neighborhoods.size() == 2);
    CHECK(rep.neighborhoods[0].pass());
    CHECK_FALSE(rep.neighborhoods[1].pass());
    CHECK_FALSE(rep.neighborhoods[1].is_closed_ac);
}

TEST_CASE("verify_mackey_arens: compactness leg on slab-style bases") {
    DualPair pair(2);
    // At lambda = 1 the neighborhood is the crisp slab; its polar is a
    // bounded segment, so the compactness leg passes.
    std::vector<StepFuzzySet> slab{
        weak_neighborhood({e1_2()}, q(1), pair, WeakNbhdMode::Definition)};
    auto rep1 = verify_mackey_arens(slab, {e1_2()}, pair);
    REQUIRE(rep1.neighborhoods.size() == 1);
    CHECK(rep1.neighborhoods[0].polar_weakly_compact);
    // A graded slab (lambda < 1, literal mode) has a polar with a
    // WholeSpace base level, which is not weakly compact.
    std::vector<StepFuzzySet> graded{
        weak_neighborhood({e1_2()}, q(1, 2), pair, WeakNbhdMode::PaperLiteral)};
    auto rep2 = verify_mackey_arens(graded, {e1_2()}, pair);
    REQUIRE(rep2.neighborhoods.size() == 1);
    CHECK_FALSE(rep2.neighborhoods[0].polar_weakly_compact);
    CHECK_FALSE(rep2.overall);
}

TEST_CASE("seminorm_from_bounded_nbhd") {
    auto unit = StepFuzzySet::crisp(Region::interval(q(-1), q(1)));
    auto sem = seminorm_from_bounded_nbhd(unit, {unit});
    CHECK(fuzzy_equal(sem, unit));
    CHECK(predicate(PredicateKind::Seminorm, sem));

    auto half = StepFuzzySet::crisp(Region::interval(q(0), q(1)));
    auto sym = seminorm_from_bounded_nbhd(half, {unit});
    CHECK(fuzzy_equal(sym, unit));

    auto two = StepFuzzySet::construct(
        1, {{q(1, 2), Region::interval(q(-2), q(2))},
            {q(1), Region::interval(q(-1), q(1))}});
    CHECK(fuzzy_equal(seminorm_from_bounded_nbhd(two, {unit}), two));

    // Unbounded input violates the precondition.
    auto ray = StepFuzzySet::crisp(Region::hpolyhedron(1, {{{q(-1)}, q(0)}}));
    CHECK_THROWS_AS(seminorm_from_bounded_nbhd(ray, {unit}), InvalidInput);
}

TEST_CASE("property: polar bases are absolutely convex with grade 1 at 0") {
    Rng rng(32);
    for (int iter = 0; iter < 8; ++iter) {
        int dim = rng.uniform_int(1, 2);
        DualPair pair(dim);
        std::vector<StepFuzzySet> gens;
        int m = rng.uniform_int(1, 3);
        for (int i = 0; i < m; ++i) gens.push_back(rng.abs_convex_set(dim));
        FuzzyCollection b(pair, std::move(gens));
        for (const auto& nu : polar_base(b)) {
            CHECK(predicate(PredicateKind::AbsolutelyConvex, nu));
            CHECK(membership(nu, zero_vec(dim)) == 1);
        }
    }
}
