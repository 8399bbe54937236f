#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nok/dh.hpp"
#include "nok/oracle.hpp"
#include "nok/semigroup.hpp"

#include <random>

using namespace nok;

namespace {

PointTuple random_tuple(int n, std::mt19937& rng, long coord_max, bool distinct) {
    std::uniform_int_distribution<long> d(0, coord_max);
    for (;;) {
        std::vector<std::array<long, 2>> pts;
        for (int i = 0; i < n; ++i) pts.push_back({d(rng), d(rng)});
        PointTuple t(pts);
        if (!distinct) return t;
        bool ok = true;
        for (int i = 0; i + 1 < n; ++i)
            if (t.pts[i] == t.pts[i + 1]) ok = false;
        if (ok) return t;
    }
}

}  // namespace

TEST_CASE("valuation of the worked example and edge cases") {
    MPoly f(4);
    f.add_term({2, 2, 0, 1}, Rat(1));  // x1^2 x2^2 y2
    f.add_term({1, 4, 5, 3}, Rat(1));  // x1 x2^4 y1^5 y2^3
    CHECK(valuation(f) == ValVector{{1, 4}, {5, 3}});
    CHECK(valuation(MPoly::constant(4, Rat(5))) == ValVector{{0, 0}, {0, 0}});
    CHECK_THROWS_AS(valuation(MPoly(4)), std::invalid_argument);
    CHECK(valuation(determinant(PointTuple{{{0, 0}, {0, 1}}})) == ValVector{{0, 0}, {0, 1}});
}

TEST_CASE("monomial_symmetric and determinant expansions") {
    MPoly m = monomial_symmetric(PointTuple{{{1, 0}, {0, 0}}});
    MPoly expect(4);
    expect.add_term({1, 0, 0, 0}, Rat(1));
    expect.add_term({0, 1, 0, 0}, Rat(1));
    CHECK((m - expect).is_zero());

    MPoly d = determinant(PointTuple{{{0, 0}, {1, 0}}});
    MPoly dx(4);
    dx.add_term({0, 1, 0, 0}, Rat(1));
    dx.add_term({1, 0, 0, 0}, Rat(-1));
    CHECK((d - dx).is_zero());

    CHECK_THROWS_AS(determinant(PointTuple{{{1, 1}, {1, 1}}}), std::invalid_argument);
}

TEST_CASE("valuation of a determinant is the concatenated sorted tuple") {
    std::mt19937 rng(42);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + t % 3;  // 2..4
        PointTuple pt = random_tuple(n, rng, 4, true);
        ValVector v = valuation(determinant(pt));
        for (int i = 0; i < n; ++i) {
            CHECK(v.p[i] == pt.pts[i][0]);
            CHECK(v.q[i] == pt.pts[i][1]);
        }
    }
}

TEST_CASE("nu is a valuation on random samples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coef(-3, 3), expo(0, 3);
    auto draw = [&](int nv) {
        MPoly f(nv);
        for (int k = 0; k < 4; ++k) {
            std::vector<int> e(nv);
            for (auto& x : e) x = (int)expo(rng);
            f.add_term(e, Rat(coef(rng)));
        }
        return f;
    };
    int checked = 0;
    while (checked < 200) {
        MPoly f = draw(4), g = draw(4);
        if (f.is_zero() || g.is_zero()) continue;
        ++checked;
        CHECK(valuation(f * g) == valuation(f) + valuation(g));
        MPoly s = f + g;
        if (!s.is_zero()) {
            ValVector vs = valuation(s);
            ValVector lo = std::min(valuation(f), valuation(g));
            CHECK(!(vs < lo));
        }
    }
}

TEST_CASE("jr_member basics and determinant products") {
    MPoly y1y2(4);  // y1 - y2
    y1y2.add_term({0, 0, 1, 0}, Rat(1));
    y1y2.add_term({0, 0, 0, 1}, Rat(-1));
    CHECK(jr_member(y1y2 * y1y2, 2, 2));
    MPoly x1x2(4);  // x1 - x2
    x1x2.add_term({1, 0, 0, 0}, Rat(1));
    x1x2.add_term({0, 1, 0, 0}, Rat(-1));
    CHECK(!jr_member(x1x2, 2, 2));

    std::mt19937 rng(11);
    for (int n = 2; n <= 3; ++n)
        for (long r = 1; r <= 3; ++r) {
            MPoly prod = MPoly::constant(2 * n, Rat(1));
            for (long k = 0; k < r; ++k) prod = prod * determinant(random_tuple(n, rng, 3, true));
            CHECK(jr_member(prod, n, r));
        }
}

TEST_CASE("valuation_set_Ar equals the semigroup on boxes") {
    // n=2, r=2, box 2: computed from symbolic determinants vs gamma rows.
    auto oracle = valuation_set_Ar(2, 2, 2, 2);
    auto gamma = gamma_enumerate_box(GammaSpec(2, 2), 2, 2);
    CHECK(oracle == gamma);

    // n=1: everything in the box.
    auto all1 = valuation_set_Ar(1, 2, 2, 2);
    CHECK(all1.size() == 9);

    // r=0 goes through the symmetric orbit sums.
    auto g0 = valuation_set_Ar(2, 0, 2, 2);
    CHECK(g0 == gamma_enumerate_box(GammaSpec(2, 0), 2, 2));

    // n=2, r=1, graded piece (1,1): exactly the two valuations.
    auto a1 = valuation_set_Ar(2, 1, 1, 1);
    std::vector<ValVector> graded;
    for (const auto& v : a1)
        if (v.p[0] + v.p[1] == 1 && v.q[0] + v.q[1] == 1) graded.push_back(v);
    REQUIRE(graded.size() == 2);
    CHECK(graded[0] == ValVector{{0, 1}, {0, 1}});
    CHECK(graded[1] == ValVector{{0, 1}, {1, 0}});
    CHECK(graded_count(GammaSpec(2, 1), 1, 1) == 2);
}

TEST_CASE("product valuations verified symbolically") {
    std::mt19937 rng(99);
    for (int n = 2; n <= 3; ++n)
        for (long r = 1; r <= 3; ++r)
            for (int t = 0; t < 10; ++t) {
                std::vector<PointTuple> tuples;
                for (long k = 0; k < r; ++k) tuples.push_back(random_tuple(n, rng, 3, true));
                CHECK(verify_product_valuation(tuples));
            }
}

TEST_CASE("newton_polytope_bounds") {
    MPoly y1y2(4);
    y1y2.add_term({0, 0, 1, 0}, Rat(1));
    y1y2.add_term({0, 0, 0, 1}, Rat(-1));
    CHECK(newton_polytope_bounds(y1y2 * y1y2, 2));

    std::mt19937 rng(5);
    for (int n = 2; n <= 3; ++n)
        for (int t = 0; t < 10; ++t)
            CHECK(newton_polytope_bounds(determinant(random_tuple(n, rng, 3, true)), 1));
    for (int t = 0; t < 5; ++t) {
        MPoly prod = determinant(random_tuple(3, rng, 3, true)) *
                     determinant(random_tuple(3, rng, 3, true));
        CHECK(newton_polytope_bounds(prod, 2));
    }
}

TEST_CASE("gap rule holds for oracle products") {
    std::mt19937 rng(17);
    for (long r = 1; r <= 3; ++r)
        for (int t = 0; t < 20; ++t) {
            MPoly prod = MPoly::constant(6, Rat(1));
            for (long k = 0; k < r; ++k) prod = prod * determinant(random_tuple(3, rng, 3, true));
            ValVector v = valuation(prod);
            for (int j = 0; j + 1 < 3; ++j)
                if (v.p[j] == v.p[j + 1]) CHECK(v.q[j + 1] >= v.q[j] + r);
        }
}

TEST_CASE("toric_restriction_filter") {
    auto square = SurfacePreset::p1xp1().polygon_of_class({Rat(1), Rat(1)});
    MPoly y1sq(4);
    y1sq.add_term({0, 0, 2, 0}, Rat(1));
    CHECK(!toric_restriction_filter(y1sq, square));
    CHECK(toric_restriction_filter(determinant(PointTuple{{{0, 0}, {1, 1}}}), square));
}

TEST_CASE("toric filter valuations land in the toric semigroup") {
    std::mt19937 rng(23);
    auto poly = SurfacePreset::p2().polygon_of_class({Rat(4)});
    for (long r = 0; r <= 2; ++r) {
        GammaSpec g(2, r, poly);
        int hits = 0;
        for (int t = 0; t < 400 && hits < 25; ++t) {
            MPoly f = r == 0 ? monomial_symmetric(random_tuple(2, rng, 4, false))
                             : MPoly::constant(4, Rat(1));
            if (r > 0)
                for (long k = 0; k < r; ++k) f = f * determinant(random_tuple(2, rng, 2, true));
            if (!toric_restriction_filter(f, poly)) continue;
            ++hits;
            CHECK(gamma_member(g, valuation(f)));
        }
        CHECK(hits > 0);
    }
}

TEST_CASE("fiber_volume basics") {
    CHECK(fiber_volume(1, Rat(3, 2), Rat(7)) == Rat(1));
    CHECK(fiber_volume(1, Rat(-1), Rat(0)) == Rat(0));
    CHECK(fiber_volume(2, Rat(-1), Rat(2)) == Rat(0));
    // Chamber formula for n=2, p,q >= 1: pq/2 - 1/4.
    CHECK(fiber_volume(2, Rat(1), Rat(1)) == Rat(1, 4));
    CHECK(fiber_volume(2, Rat(2), Rat(2)) == Rat(7, 4));
    CHECK(fiber_volume(2, Rat(3, 2), Rat(2)) == Rat(5, 4));
    // Degenerate slice at p=0: the fiber drops dimension.
    CHECK(fiber_volume(2, Rat(0), Rat(2)) == Rat(0));
}

TEST_CASE("fiber_volume matches its chamber polynomial") {
    // Fit c0 + c1 p + c2 q + c3 p^2 + c4 pq + c5 q^2 from 6 points in the
    // chamber p,q >= 1 and check a 7th point.
    std::vector<std::pair<Rat, Rat>> pts = {{Rat(1), Rat(1)},       {Rat(2), Rat(1)},
                                            {Rat(1), Rat(2)},       {Rat(3), Rat(1)},
                                            {Rat(2), Rat(2)},       {Rat(1), Rat(3)}};
    QMat M(6, 6);
    QVec rhs(6);
    for (int i = 0; i < 6; ++i) {
        auto [p, q] = pts[i];
        M.at(i, 0) = Rat(1);
        M.at(i, 1) = p;
        M.at(i, 2) = q;
        M.at(i, 3) = p * p;
        M.at(i, 4) = p * q;
        M.at(i, 5) = q * q;
        rhs[i] = fiber_volume(2, p, q);
    }
    auto coef = solve_linear(M, rhs);
    REQUIRE(coef.has_value());
    Rat p(5, 2), q(7, 3);
    Rat predicted = (*coef)[0] + (*coef)[1] * p + (*coef)[2] * q + (*coef)[3] * p * p +
                    (*coef)[4] * p * q + (*coef)[5] * q * q;
    CHECK(predicted == fiber_volume(2, p, q));
}

TEST_CASE("dh_compare converges and degenerates correctly") {
    std::vector<std::pair<Rat, Rat>> grid;
    for (long i = 2; i <= 4; ++i)
        for (long j = 2; j <= 4; ++j) grid.push_back({Rat(i, 2), Rat(j, 2)});

    auto r10 = dh_compare(2, 10, grid);
    auto r20 = dh_compare(2, 20, grid);
    CHECK(r20.max_deviation <= r10.max_deviation);
    CHECK(r20.max_deviation <= Rat(10, 20));

    auto one = dh_compare(1, 10, {{Rat(1), Rat(2)}, {Rat(0), Rat(0)}});
    CHECK(one.max_deviation == Rat(0));

    auto out = dh_compare(2, 10, {{Rat(-1), Rat(1)}});
    CHECK(out.entries[0].scaled_count == Rat(0));
    CHECK(out.entries[0].fiber_vol == Rat(0));
}
