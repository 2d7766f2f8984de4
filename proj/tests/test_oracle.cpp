#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fuzzpolar/errors.hpp"
#include "fuzzpolar/oracle.hpp"
#include "fuzzpolar/polar.hpp"
#include "test_helpers.hpp"

using namespace fuzzpolar;
using fuzzpolar::testing::Rng;

namespace {

Rational q(int n, int d = 1) { return Rational(n, d); }

StepFuzzySet two_level_boxes() {
    Region outer = Region::vpolytope(
        2, {{q(2), q(2)}, {q(2), q(-2)}, {q(-2), q(2)}, {q(-2), q(-2)}});
    Region inner = Region::vpolytope(
        2, {{q(1), q(1)}, {q(1), q(-1)}, {q(-1), q(1)}, {q(-1), q(-1)}});
    return StepFuzzySet::construct(2, {{q(1, 2), outer}, {q(1), inner}});
}

} // namespace

TEST_CASE("Grid: construction, bounds, and the size cap") {
    Grid g({{q(-2), q(2), q(1)}});
    CHECK(g.points().size() == 5);
    CHECK(g.points().front() == Vec{q(-2)});
    CHECK(g.points().back() == Vec{q(2)});
    Grid g2 = Grid::symmetric(2, q(1), 2);
    CHECK(g2.points().size() == 25);
    CHECK_THROWS_WITH_AS(Grid({{q(0), q(10), q(1, 100000)}}),
                         doctest::Contains("grid-too-large"), Unsupported);
    CHECK_THROWS_AS(Grid({{q(2), q(0), q(1)}}), InvalidInput);
    CHECK_THROWS_AS(Grid({{q(0), q(1), q(0)}}), InvalidInput);
}

TEST_CASE("oracle_membership on an interval and an empty chain") {
    auto chi = StepFuzzySet::crisp(Region::interval(q(-1), q(1)));
    auto table = oracle_membership(chi, Grid({{q(-2), q(2), q(1)}}));
    REQUIRE(table.size() == 5);
    CHECK(table[0].grade == 0);
    CHECK(table[1].grade == 1);
    CHECK(table[2].grade == 1);
    CHECK(table[3].grade == 1);
    CHECK(table[4].grade == 0);

    auto boxes = two_level_boxes();
    auto t2 = oracle_membership(boxes, Grid({{q(3, 2), q(3, 2), q(1)},
                                             {q(0), q(0), q(1)}}));
    REQUIRE(t2.size() == 1);
    CHECK(t2[0].grade == q(1, 2));

    auto empty = StepFuzzySet::construct(1, {});
    for (const auto& e : oracle_membership(empty, Grid({{q(-1), q(1), q(1)}})))
        CHECK(e.grade == 0);
}

TEST_CASE("polar_theta_grid carries grades, complements, and midpoints") {
    auto mu = two_level_boxes();
    auto thetas = polar_theta_grid(mu);
    auto has = [&](const Rational& v) {
        return std::find(thetas.begin(), thetas.end(), v) != thetas.end();
    };
    CHECK(has(q(1, 2)));
    CHECK(has(q(1)));
    CHECK(has(q(3, 4))); // midpoint between 1/2 and 1
    CHECK(has(q(1, 4))); // probe below the least breakpoint
    CHECK(std::is_sorted(thetas.begin(), thetas.end()));
    for (const auto& t : thetas) CHECK((t > 0 && t <= 1));
}

TEST_CASE("oracle_polar: interval, constant-1, two-level boxes") {
    DualPair pair1(1);
    auto chi = StepFuzzySet::crisp(Region::interval(q(-1), q(1)));
    auto table = oracle_polar(chi, Grid({{q(1, 2), q(1, 2), q(1)}}),
                              polar_theta_grid(chi), pair1);
    REQUIRE(table.size() == 1);
    CHECK(table[0].grade == 1);

    DualPair pair2(2);
    auto ones = StepFuzzySet::crisp(Region::whole_space(2));
    auto t1 = oracle_polar(ones, Grid({{q(1), q(1), q(1)}, {q(0), q(0), q(1)}}),
                           polar_theta_grid(ones), pair2);
    CHECK(t1[0].grade == 0);
    auto t0 = oracle_polar(ones, Grid({{q(0), q(0), q(1)}, {q(0), q(0), q(1)}}),
                           polar_theta_grid(ones), pair2);
    CHECK(t0[0].grade == 1);

    auto boxes = two_level_boxes();
    auto t2 = oracle_polar(boxes, Grid({{q(3, 4), q(3, 4), q(1)},
                                        {q(0), q(0), q(1)}}),
                           polar_theta_grid(boxes), pair2);
    CHECK(t2[0].grade == q(1, 2));
}

TEST_CASE("oracle_polar: refined theta grids never lower a grade") {
    DualPair pair(2);
    auto mu = two_level_boxes();
    Grid dual = Grid::symmetric(2, q(2), 4);
    auto coarse_thetas = polar_theta_grid(mu);
    auto fine_thetas = coarse_thetas;
    for (std::size_t i = 1; i < coarse_thetas.size(); ++i)
        fine_thetas.push_back((coarse_thetas[i - 1] + coarse_thetas[i]) / 2);
    auto coarse = oracle_polar(mu, dual, coarse_thetas, pair);
    auto fine = oracle_polar(mu, dual, fine_thetas, pair);
    REQUIRE(coarse.size() == fine.size());
    for (std::size_t i = 0; i < coarse.size(); ++i)
        CHECK(fine[i].grade >= coarse[i].grade);
}

TEST_CASE("oracle_add: crisp intervals and the additive identity") {
    auto a = StepFuzzySet::crisp(Region::interval(q(0), q(1)));
    auto b = StepFuzzySet::crisp(Region::interval(q(1), q(2)));
    Grid grid({{q(0), q(4), q(1)}});
    auto table = oracle_add(a, b, grid);
    for (const auto& e : table) {
        bool inside = e.point[0] >= 1 && e.point[0] <= 3;
        CHECK(e.grade == (inside ? Grade(1) : Grade(0)));
    }
    auto mu = two_level_boxes();
    Grid g2 = Grid::symmetric(2, q(3), 3);
    auto zero = StepFuzzySet::crisp(Region::origin(2));
    auto sum_table = oracle_add(mu, zero, g2);
    auto mem_table = oracle_membership(mu, g2);
    REQUIRE(sum_table.size() == mem_table.size());
    for (std::size_t i = 0; i < sum_table.size(); ++i)
        CHECK(sum_table[i].grade == mem_table[i].grade);
}

TEST_CASE("compare: pass, corruption sensitivity, dimension mismatch") {
    auto mu = two_level_boxes();
    Grid grid = Grid::symmetric(2, q(3), 3);
    CHECK(compare(mu, oracle_membership(mu, grid)).pass());
    // Corrupt the chain: shrink the top level.
    auto corrupted = StepFuzzySet::construct(
        2, {{q(1, 2), level_set(mu, q(1, 2))}, {q(1), Region::origin(2)}});
    CHECK_FALSE(compare(corrupted, oracle_membership(mu, grid)).pass());
    GradeTable bad{{Vec{q(0)}, Grade(1)}};
    CHECK_THROWS_AS(compare(mu, bad), InvalidInput);
}

TEST_CASE("property: oracle_polar equals the closed form on the theta lattice") {
    Rng rng(41);
    for (int iter = 0; iter < 6; ++iter) {
        int dim = rng.uniform_int(1, 2);
        DualPair pair(dim);
        auto mu = rng.step_set(dim, 2);
        auto p = fuzzy_polar(mu, pair);
        Grid dual = Grid::symmetric(dim, q(3), 6);
        CHECK(compare(p, oracle_polar(mu, dual, polar_theta_grid(mu), pair)).pass());
    }
}
