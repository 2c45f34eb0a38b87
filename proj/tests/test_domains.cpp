#include <doctest.h>

#include <random>
#include <vector>

#include "test_util.hpp"
#include "toricap/domains.hpp"
#include "toricap/errors.hpp"

using namespace toricap;
using testutil::random_concave_region;
using testutil::random_convex_region;
using testutil::random_rational;
using testutil::scale_region;

TEST_CASE("make_veps builds the quadrilateral with the documented data") {
    const ToricRegion2D q = make_veps(Rational(1, 5));
    CHECK(q.a() == 1);
    CHECK(q.b() == 1);
    CHECK(q.area() == Rational(1, 5));
    CHECK(q.polygon() ==
          Polygon2D({{0, 0}, {1, 0}, {Rational(1, 5), Rational(1, 5)}, {0, 1}}));
    CHECK(q.flags().monotone);
    CHECK(q.flags().concave);
    CHECK_FALSE(q.flags().convex);

    CHECK(make_veps(Rational(2, 9)).flags().concave);
}

TEST_CASE("make_veps rejects eps outside (0, 1/2)") {
    CHECK_THROWS_AS(make_veps(Rational(3, 5)), InputError);
    CHECK_THROWS_AS(make_veps(Rational(1, 2)), InputError);
    CHECK_THROWS_AS(make_veps(Rational(0)), InputError);
    CHECK_THROWS_AS(make_veps(Rational(-1, 5)), InputError);
}

TEST_CASE("make_veps area equals eps across the valid range") {
    for (long long num = 1; num < 40; num += 3) {
        const Rational eps(num, 81);
        CHECK(make_veps(eps).area() == eps);
    }
}

TEST_CASE("classify separates the three boundary classes") {
    const RegionFlags triangle = make_triangle(1, 2).flags();
    CHECK(triangle.monotone);
    CHECK(triangle.concave);
    CHECK(triangle.convex);

    const RegionFlags dented = make_veps(Rational(1, 5)).flags();
    CHECK(dented.monotone);
    CHECK(dented.concave);
    CHECK_FALSE(dented.convex);

    const RegionFlags square = make_rectangle(1, 1).flags();
    CHECK(square.monotone);
    CHECK_FALSE(square.concave);
    CHECK(square.convex);
}

TEST_CASE("triangles carry all three flags for any axis lengths") {
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 20; ++i) {
        const RegionFlags f = make_triangle(random_rational(rng), random_rational(rng)).flags();
        CHECK(f.monotone);
        CHECK(f.concave);
        CHECK(f.convex);
    }
}

TEST_CASE("concave or convex regions are always monotone") {
    std::mt19937_64 rng(7777);
    for (int i = 0; i < 20; ++i) {
        const RegionFlags fc = random_concave_region(rng).flags();
        CHECK(fc.concave);
        CHECK(fc.monotone);
        const RegionFlags fv = random_convex_region(rng).flags();
        CHECK(fv.convex);
        CHECK(fv.monotone);
    }
}

TEST_CASE("a region can be monotone without being concave or convex") {
    // Chain (3,0) -> (1,1) -> (1,2) -> (0,2): monotone staircase, but the
    // complement is not convex and neither is the reflected region.
    const ToricRegion2D stairs = ToricRegion2D::from_chain({{3, 0}, {1, 1}, {1, 2}, {0, 2}});
    CHECK(stairs.flags().monotone);
    CHECK_FALSE(stairs.flags().concave);
    CHECK_FALSE(stairs.flags().convex);
}

TEST_CASE("axis_data reports intercepts and the enclosing-ball size") {
    const AxisData square = axis_data(make_rectangle(1, 1));
    CHECK(square.a == 1);
    CHECK(square.b == 1);
    CHECK(square.w == 2);

    const AxisData ball = axis_data(make_triangle(1, 1));
    CHECK(ball.a == 1);
    CHECK(ball.b == 1);
    CHECK(ball.w == 1);

    const AxisData q = axis_data(make_veps(Rational(1, 4)));
    CHECK(q.a == 1);
    CHECK(q.b == 1);
    CHECK(q.w == 1);
}

TEST_CASE("boundary_min runs over the positive boundary only") {
    CHECK(boundary_min(make_triangle(1, 2), Vec2{1, 1}) == 1);
    CHECK(boundary_min(make_veps(Rational(1, 5)), Vec2{1, 2}) == Rational(3, 5));
    CHECK(boundary_min(make_triangle(1, 1), Vec2{2, 1}) == 1);
}

TEST_CASE("region_contains decides the documented inclusions") {
    CHECK(region_contains(moment_region(EllipsoidSpec({Rational(1, 2), 1})),
                          make_veps(Rational(2, 5))));
    CHECK(region_contains(make_veps(Rational(2, 5)), ball_region(1)));
    CHECK(region_contains(moment_region(EllipsoidSpec({Rational(3, 10), Rational(3, 5)})),
                          make_veps(Rational(1, 5))));
    // ... and rejects the reverse, which is strict.
    CHECK_FALSE(region_contains(ball_region(1), make_veps(Rational(2, 5))));
}

TEST_CASE("B(w) is the smallest enclosing ball") {
    std::mt19937_64 rng(31415);
    std::vector<ToricRegion2D> fixtures{make_rectangle(1, 1), make_veps(Rational(1, 4)),
                                        make_triangle(1, 2)};
    for (int i = 0; i < 5; ++i) fixtures.push_back(random_concave_region(rng));
    for (const ToricRegion2D& region : fixtures) {
        const Rational w = axis_data(region).w;
        CHECK(region_contains(region, ball_region(w)));
        for (const Rational& delta : {Rational(1, 7), Rational(1, 100)}) {
            if (w - delta > 0) CHECK_FALSE(region_contains(region, ball_region(w - delta)));
        }
    }
}

TEST_CASE("inclusion behaves as a partial order") {
    const ToricRegion2D square = make_rectangle(1, 1);
    CHECK(region_contains(square, square));  // reflexive

    // Antisymmetry: mutual inclusion only for equal canonical polygons.
    const ToricRegion2D same(Polygon2D({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK(region_contains(square, same));
    CHECK(region_contains(same, square));
    CHECK(square.polygon() == same.polygon());

    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10; ++i) {
        const ToricRegion2D base = random_concave_region(rng);
        const ToricRegion2D mid = scale_region(base, Rational(3, 2));
        const ToricRegion2D big = scale_region(base, 2);
        CHECK(region_contains(base, mid));
        CHECK(region_contains(mid, big));
        CHECK(region_contains(base, big));  // transitivity along the chain
        CHECK_FALSE(region_contains(mid, base));
    }
}

TEST_CASE("region_contains rejects non-monotone operands") {
    const ToricRegion2D wiggle =
        ToricRegion2D::from_chain({{2, 0}, {1, 1}, {Rational(3, 2), Rational(3, 2)}, {0, 2}});
    CHECK_FALSE(wiggle.flags().monotone);
    CHECK_THROWS_AS(region_contains(wiggle, make_rectangle(2, 2)), InputError);
    CHECK_THROWS_AS(region_contains(make_triangle(1, 1), wiggle), InputError);
}

TEST_CASE("region_contains_point matches the boundary envelopes") {
    const ToricRegion2D q = make_veps(Rational(1, 5));
    CHECK(region_contains_point(q, {Rational(1, 5), Rational(1, 5)}));  // chain vertex
    CHECK(region_contains_point(q, {0, 0}));
    CHECK(region_contains_point(q, {1, 0}));
    CHECK(region_contains_point(q, {Rational(1, 10), Rational(1, 10)}));
    CHECK_FALSE(region_contains_point(q, {Rational(1, 4), Rational(1, 4)}));
    CHECK_FALSE(region_contains_point(q, {1, 1}));
}

TEST_CASE("eval_upper and eval_lower trace the chain envelopes") {
    const ToricRegion2D square = make_rectangle(1, 1);
    const std::vector<Vec2>& square_chain = square.chain();
    CHECK(eval_upper(square_chain, Rational(1, 2)) == 1);
    CHECK(eval_lower(square_chain, Rational(1, 2)) == 1);
    CHECK(eval_upper(square_chain, 1) == 1);   // vertical edge: both endpoints
    CHECK(eval_lower(square_chain, 1) == 0);

    const ToricRegion2D q_region = make_veps(Rational(1, 5));
    const std::vector<Vec2>& q_chain = q_region.chain();
    CHECK(eval_upper(q_chain, Rational(1, 5)) == Rational(1, 5));
    CHECK(eval_lower(q_chain, Rational(1, 5)) == Rational(1, 5));

    CHECK_THROWS_AS(eval_upper(square_chain, Rational(3, 2)), InputError);
    CHECK_THROWS_AS(eval_lower(square_chain, Rational(-1, 2)), InputError);
}

TEST_CASE("chain accessors expose the positive boundary") {
    const ToricRegion2D q = make_veps(Rational(2, 9));
    const std::vector<Vec2>& chain = q.chain();
    REQUIRE(chain.size() == 3);
    CHECK(chain.front() == Vec2{1, 0});
    CHECK(chain[1] == Vec2{Rational(2, 9), Rational(2, 9)});
    CHECK(chain.back() == Vec2{0, 1});
    CHECK(q.a() == 1);
    CHECK(q.b() == 1);

    const ToricRegion2D round_trip = ToricRegion2D::from_chain(chain);
    CHECK(round_trip.polygon() == q.polygon());
}

TEST_CASE("model regions coincide with their moment images") {
    CHECK(moment_region(EllipsoidSpec({1, 2})).polygon() == make_triangle(1, 2).polygon());
    CHECK(ball_region(Rational(3, 2)).polygon() ==
          make_triangle(Rational(3, 2), Rational(3, 2)).polygon());
    CHECK_THROWS_AS(moment_region(EllipsoidSpec({1, 2, 3})), InputError);
}

TEST_CASE("model specs validate their axes") {
    CHECK_THROWS_AS(EllipsoidSpec({}), InputError);
    CHECK_THROWS_AS(EllipsoidSpec({Rational(0)}), InputError);
    CHECK_THROWS_AS(PolydiskSpec({Rational(-1)}), InputError);
    CHECK_THROWS_AS(make_triangle(0, 1), InputError);
    CHECK_THROWS_AS(make_rectangle(1, Rational(-2)), InputError);
}

TEST_CASE("from_chain validates the chain endpoints and interior") {
    CHECK_THROWS_AS(ToricRegion2D::from_chain({{1, 1}, {0, 1}}), InputError);  // not on the x-axis
    CHECK_THROWS_AS(ToricRegion2D::from_chain({{1, 0}, {2, 1}}), InputError);  // not on the y-axis
    CHECK_THROWS_AS(ToricRegion2D::from_chain({{1, 0}, {0, 0}, {0, 1}}), InputError);
}
