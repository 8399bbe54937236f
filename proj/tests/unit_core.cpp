#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nok/lp.hpp"
#include "nok/polygon.hpp"
#include "nok/rational.hpp"
#include "nok/semigroup.hpp"

#include <random>
#include <set>

using namespace nok;

TEST_CASE("Rat parsing and arithmetic") {
    CHECK(Rat::parse("3/4") == Rat(3, 4));
    CHECK(Rat::parse("-6/8") == Rat(-3, 4));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat::parse("112811/2688").str() == "112811/2688");
    CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK(Rat(5, -10) == Rat(-1, 2));
    CHECK(Rat(-7, 2).floor_long() == -4);
    CHECK(Rat(7, 2).floor_long() == 3);
}

TEST_CASE("Rat field axioms on random samples") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
    auto draw = [&] { return Rat(num(rng), den(rng)); };
    for (int t = 0; t < 200; ++t) {
        Rat a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rat(0));
        if (!a.is_zero()) CHECK(a * (Rat(1) / a) == Rat(1));
    }
}

TEST_CASE("solve_linear and rank") {
    QMat M(2, 2);
    M.at(0, 0) = Rat(2);
    M.at(0, 1) = Rat(1);
    M.at(1, 0) = Rat(1);
    M.at(1, 1) = Rat(3);
    auto x = solve_linear(M, {Rat(5), Rat(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(1));
    CHECK((*x)[1] == Rat(3));
    QMat S(2, 2);
    S.at(0, 0) = Rat(1);
    S.at(0, 1) = Rat(2);
    S.at(1, 0) = Rat(2);
    S.at(1, 1) = Rat(4);
    CHECK(!solve_linear(S, {Rat(1), Rat(1)}).has_value());
    CHECK(rank(S) == 1);
    CHECK(rank(M) == 2);
}

TEST_CASE("polygon presets: shape, area, lattice points") {
    auto p2 = SurfacePreset::p2().polygon_of_class({Rat(3)});
    CHECK(p2.cap() == Rat(3));
    CHECK(p2.area() == Rat(9, 2));
    CHECK(p2.vertices().size() == 3);
    CHECK((long)p2.lattice_points().size() == 10);  // Ehrhart count of 3*unit triangle
    CHECK(p2.contains(Rat(1), Rat(2)));
    CHECK(!p2.contains(Rat(2), Rat(2)));

    auto pp = SurfacePreset::p1xp1().polygon_of_class({Rat(2), Rat(5)});
    CHECK(pp.area() == Rat(10));
    CHECK(pp.vertices().size() == 4);

    auto h2 = SurfacePreset::hirzebruch(2).polygon_of_class({Rat(1), Rat(1)});
    // Trapezoid 0<=a<=1, 0<=b<=1+2a: vertices (0,0),(1,0),(1,3),(0,1).
    CHECK(h2.area() == Rat(2));
    CHECK(h2.vertices().size() == 4);
    CHECK(h2.upper(Rat(1)) == Rat(3));

    CHECK(SurfacePreset::from_name("H7").e() == 7);
    CHECK_THROWS_AS(SurfacePreset::from_name("Hx"), std::invalid_argument);
}

TEST_CASE("polygon scaling is homogeneous of degree 2 in area") {
    auto p = SurfacePreset::hirzebruch(1).polygon_of_class({Rat(2), Rat(3)});
    CHECK(p.scaled(Rat(5, 2)).area() == Rat(25, 4) * p.area());
    CHECK_THROWS_AS(p.scaled(Rat(-1)), std::invalid_argument);
}

TEST_CASE("empty polygon rejected with named pieces") {
    CHECK_THROWS_AS(NewtonPolygon(Rat(1), {{Rat(0), Rat(2)}}, {{Rat(0), Rat(1)}}),
                    std::invalid_argument);
}

TEST_CASE("Gamma_0 and Gamma_1 are the lex chains") {
    GammaSpec g0(2, 0), g1(2, 1);
    for (long p1 = 0; p1 <= 3; ++p1)
        for (long p2 = 0; p2 <= 3; ++p2)
            for (long q1 = 0; q1 <= 3; ++q1)
                for (long q2 = 0; q2 <= 3; ++q2) {
                    ValVector v{{p1, p2}, {q1, q2}};
                    bool weak = p1 < p2 || (p1 == p2 && q1 <= q2);
                    bool strict = p1 < p2 || (p1 == p2 && q1 < q2);
                    CHECK(gamma_member(g0, v) == weak);
                    CHECK(gamma_member(g1, v) == strict);
                }
}

TEST_CASE("both membership descriptions agree, C^2 and toric") {
    auto poly = SurfacePreset::hirzebruch(1).polygon_of_class({Rat(4), Rat(3)});
    for (int n = 1; n <= 3; ++n)
        for (long r = 0; r <= 4; ++r) {
            GammaSpec plain(n, r), toric(n, r, poly);
            std::vector<long> p(n), q(n);
            std::mt19937 rng(1000 * n + r);
            std::uniform_int_distribution<long> d(0, 7);
            for (int t = 0; t < 4000; ++t) {
                for (int i = 0; i < n; ++i) {
                    p[i] = d(rng);
                    q[i] = d(rng);
                }
                std::sort(p.begin(), p.end());
                ValVector v{p, q};
                CHECK(gamma_member(plain, v) == gamma_member_sumform(plain, v));
                CHECK(gamma_member(toric, v) == gamma_member_sumform(toric, v));
            }
        }
}

TEST_CASE("negative excess normalizes by parity") {
    CHECK(GammaSpec(2, -4).r() == 0);
    CHECK(GammaSpec(2, -7).r() == 1);
}

TEST_CASE("semigroup closure under addition") {
    GammaSpec g(3, 2);
    auto box = gamma_enumerate_box(g, 3, 4);
    std::set<std::pair<std::vector<long>, std::vector<long>>> members;
    for (const auto& v : gamma_enumerate_box(g, 8, 10)) members.insert({v.p, v.q});
    for (size_t i = 0; i < box.size(); i += 7)
        for (size_t j = 0; j < box.size(); j += 11) {
            ValVector s = box[i] + box[j];
            CHECK(members.count({s.p, s.q}) == 1);
        }
}

TEST_CASE("box enumeration is lex sorted and matches brute force") {
    GammaSpec g(2, 2);
    auto box = gamma_enumerate_box(g, 3, 5);
    CHECK(std::is_sorted(box.begin(), box.end()));
    long brute = 0;
    for (long p1 = 0; p1 <= 3; ++p1)
        for (long p2 = 0; p2 <= 3; ++p2)
            for (long q1 = 0; q1 <= 5; ++q1)
                for (long q2 = 0; q2 <= 5; ++q2)
                    if (gamma_member(g, ValVector{{p1, p2}, {q1, q2}})) ++brute;
    CHECK((long)box.size() == brute);
}

TEST_CASE("graded pieces partition the box by coordinate sums") {
    auto poly = SurfacePreset::p2().polygon_of_class({Rat(5)});
    GammaSpec g(2, 1, poly);
    auto box = gamma_enumerate_box(g, 10, 10);
    long total = 0;
    for (long p = 0; p <= 10; ++p)
        for (long q = 0; q <= 50; ++q) total += graded_count(g, p, q);
    long unbox = 0;  // graded members can leave the box per coordinate
    for (const auto& v : box) {
        long ps = 0, qs = 0;
        for (int i = 0; i < v.n(); ++i) {
            ps += v.p[i];
            qs += v.q[i];
        }
        if (ps <= 10 && qs <= 50) ++unbox;
    }
    CHECK(unbox == (long)box.size());
    CHECK(total >= (long)box.size());
}

TEST_CASE("minkowski_decompose round trip") {
    for (int n = 1; n <= 3; ++n)
        for (long r = 1; r <= 3; ++r) {
            GammaSpec g(n, r), g1(n, 1);
            for (const auto& v : gamma_enumerate_box(g, 5, 7)) {
                auto parts = minkowski_decompose(v, r);
                REQUIRE((long)parts.size() == r);
                CHECK(std::is_sorted(parts.begin(), parts.end()));
                ValVector sum = parts[0];
                for (size_t i = 1; i < parts.size(); ++i) sum = sum + parts[i];
                CHECK(sum == v);
                for (const auto& part : parts) CHECK(gamma_member(g1, part));
            }
        }
}

TEST_CASE("minkowski_decompose rejects non-members") {
    CHECK_THROWS_AS(minkowski_decompose(ValVector{{2, 1}, {0, 0}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(minkowski_decompose(ValVector{{0, 0}, {0, 0}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(minkowski_decompose(ValVector{{0, 1}, {0, 0}}, 0), std::invalid_argument);
}

TEST_CASE("lp_solve on small hand-checked programs") {
    // min x+y s.t. x >= 1, y >= 2.
    QMat A(2, 2);
    A.at(0, 0) = Rat(1);
    A.at(1, 1) = Rat(1);
    auto res = lp_solve(A, {Rat(1), Rat(2)}, {Rat(1), Rat(1)});
    REQUIRE(res.status == LPStatus::Optimal);
    CHECK(res.value == Rat(3));
    CHECK(res.x == QVec{Rat(1), Rat(2)});

    // Unbounded: min -x s.t. x >= 0.
    QMat B(1, 1);
    B.at(0, 0) = Rat(1);
    CHECK(lp_solve(B, {Rat(0)}, {Rat(-1)}).status == LPStatus::Unbounded);

    // Infeasible: x >= 1 and -x >= 0.
    QMat C(2, 1);
    C.at(0, 0) = Rat(1);
    C.at(1, 0) = Rat(-1);
    CHECK(lp_solve(C, {Rat(1), Rat(0)}, {Rat(1)}).status == LPStatus::Infeasible);

    CHECK(lp_feasible_point(C, {Rat(1), Rat(0)}) == std::nullopt);
    auto pt = lp_feasible_point(A, {Rat(1), Rat(2)});
    REQUIRE(pt.has_value());
    CHECK((*pt)[0] >= Rat(1));
}

TEST_CASE("lp redundancy and implication") {
    // x >= 1, x >= 0 (redundant), x <= 5.
    QMat A(3, 1);
    A.at(0, 0) = Rat(1);
    A.at(1, 0) = Rat(1);
    A.at(2, 0) = Rat(-1);
    QVec b{Rat(1), Rat(0), Rat(-5)};
    CHECK(lp_row_redundant(A, b, 1));
    CHECK(!lp_row_redundant(A, b, 0));
    CHECK(!lp_row_redundant(A, b, 2));
    CHECK(lp_implies(A, b, {Rat(1)}, Rat(1, 2)));
    CHECK(!lp_implies(A, b, {Rat(1)}, Rat(2)));
}

TEST_CASE("mu_slope at n=2 matches hand computation") {
    CHECK(mu_slope(SurfacePreset::p2(), {Rat(1)}, 2) == Rat(1));
    CHECK(mu_slope(SurfacePreset::p1xp1(), {Rat(1), Rat(1)}, 2) == Rat(1, 2));
    CHECK(mu_slope(SurfacePreset::hirzebruch(1), {Rat(1), Rat(1)}, 2) == Rat(1, 2));
    CHECK(mu_slope(SurfacePreset::hirzebruch(2), {Rat(1), Rat(1)}, 2) == Rat(1, 3));
}

TEST_CASE("facet_check separates valid from invalid inequalities") {
    // At n=2 on P1xP1 the section is bounded by x+y >= 1: (1,0), (0,1) and
    // the diagonal point (1/2,1/2) all lie on it.
    auto v = facet_check(SurfacePreset::p1xp1(), 2, {Rat(1), Rat(1), Rat(1)});
    CHECK(v.valid);
    CHECK(v.tight);
    auto w = facet_check(SurfacePreset::p1xp1(), 2, {Rat(1), Rat(1), Rat(2)});
    CHECK(!w.valid);
}
