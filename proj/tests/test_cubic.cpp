#include <doctest.h>

#include "parityq/curves.hpp"
#include "parityq/generate.hpp"

using namespace parityq;

TEST_CASE("invariants of pinned cubics") {
    RationalCubic f(Rational(0), Rational(1), Rational(1));  // x^3 + x + 1
    CHECK(f.b() == Rational(1));
    CHECK(f.c() == Rational(1));
    CHECK(f.L() == Rational(-9));
    CHECK(f.delta() == Rational(-31));

    RationalCubic g = RationalCubic::from_roots(Rational(1), Rational(2), Rational(3));
    CHECK(g.b() == Rational(11));
    CHECK(g.c() == Rational(-6));
    CHECK(g.L() == Rational(-12));
    CHECK(g.delta() == Rational(4));

    RationalCubic h = RationalCubic::from_roots(Rational(1), Rational(2), Rational(27));
    CHECK(h.b() == Rational(83));
    CHECK(h.c() == Rational(-54));
    CHECK(h.L() == Rational(-2004));
    CHECK(h.delta() == Rational(422500));

    CHECK_THROWS_AS(RationalCubic(Rational(0), Rational(1), Rational(0)), RootAtZero);
    CHECK_THROWS_AS(RationalCubic::from_roots(Rational(1), Rational(1), Rational(2)),
                    NotSeparable);
}

TEST_CASE("invariant identities on random split cubics") {
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        auto roots = rand_distinct_roots(rng, 3, 40, false);
        RationalCubic f = RationalCubic::from_roots(roots[0], roots[1], roots[2]);
        const Rational &r1 = roots[0], &r2 = roots[1], &r3 = roots[2];
        // discriminant as the squared root-difference product
        Rational prod = (r1 - r2) * (r1 - r3) * (r2 - r3);
        CHECK(f.delta() == prod * prod);
        // L in terms of the roots
        Rational L = Rational(8) * r1 * r2 * r3 - (r1 + r2) * (r1 + r3) * (r2 + r3);
        CHECK(f.L() == L);
    }
}

TEST_CASE("curve family models") {
    RationalCubic f = RationalCubic::from_roots(Rational(17), Rational(1), Rational(2));
    CurveFamily fam = build_family(f);
    // jac model with roots -2, -34, -17
    CHECK(fam.jacEprime.b() == f.a() * f.c());
    CHECK(fam.jacEprime.a() == f.b());
    CHECK(fam.jacEprime.c() == f.c() * f.c());
    REQUIRE(fam.jacEprime.root_data().has_value());
    CHECK(fam.jacEprime.root_data()->roots ==
          std::vector<Rational>{Rational(-34), Rational(-17), Rational(-2)});
    CHECK(fam.Eprime == UniPoly::x() * f.poly());

    RationalCubic g(Rational(0), Rational(1), Rational(1));
    CHECK(build_family(g).C == g.poly().subst_x_squared());

    // double application: constant term (c^2)^2
    RationalCubic jj = jac_cubic(jac_cubic(f));
    CHECK(jj.c() == f.c().pow(4));
}

TEST_CASE("jac model agrees with the root construction") {
    Rng rng(123);
    for (int i = 0; i < 100; ++i) {
        auto roots = rand_distinct_roots(rng, 3, 30, false);
        RationalCubic f = RationalCubic::from_roots(roots[0], roots[1], roots[2]);
        RationalCubic j = jac_cubic(f);
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                CHECK(j.eval(-(roots[(std::size_t)a] * roots[(std::size_t)b])).is_zero());
    }
}

TEST_CASE("integralize") {
    RationalCubic g(Rational(0), Rational(Int(1), Int(4)), Rational(Int(1), Int(8)));
    auto [f, d] = integralize(g);
    CHECK(d == 2);
    CHECK(f.b() == Rational(4));
    CHECK(f.c() == Rational(8));
    CHECK(f.a().is_zero());

    RationalCubic g3(Rational(0), Rational(Int(1), Int(9)), Rational(Int(1), Int(27)));
    auto [f3, d3] = integralize(g3);
    CHECK(d3 == 3);
    CHECK(f3.b() == Rational(9));
    CHECK(f3.c() == Rational(27));

    RationalCubic already(Rational(1), Rational(2), Rational(3));
    CHECK(integralize(already).second == 1);

    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        RationalCubic h(rand_rational(rng, 40, 24), rand_rational(rng, 40, 24),
                        rand_rational(rng, 40, 24));
        auto [hi, dh] = integralize(h);
        CHECK(hi.is_integral());
        Rational d2{dh * dh};
        CHECK(hi.a() == h.a() * d2);
        CHECK(hi.b() == h.b() * d2 * d2);
        CHECK(hi.c() == h.c() * d2 * d2 * d2);
    }
}

TEST_CASE("gamma shift families") {
    RationalCubic f = RationalCubic::from_roots(Rational(1), Rational(2), Rational(3));
    RationalCubic s0 = gamma_shift(f, Rational(0));
    REQUIRE(s0.root_data().has_value());
    CHECK(s0.root_data()->roots == std::vector<Rational>{Rational(-6), Rational(-3), Rational(-2)});
    RationalCubic s1 = gamma_shift(f, Rational(1));
    CHECK(s1.root_data()->roots ==
          std::vector<Rational>{Rational(-12), Rational(-8), Rational(-6)});
    CHECK_THROWS_AS(gamma_shift(f, Rational(-1)), RootAtZero);  // f(1) = 0

    // coefficient-only route agrees with the root route
    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        auto roots = rand_distinct_roots(rng, 3, 20, false);
        RationalCubic g = RationalCubic::from_roots(roots[0], roots[1], roots[2]);
        Rational gamma{Int(rng.range(-8, 8)), Int(rng.range(1, 3))};
        if (g.eval(-gamma).is_zero()) continue;
        RationalCubic shifted = gamma_shift(g, gamma);
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                Rational beta = -((roots[(std::size_t)a] + gamma) * (roots[(std::size_t)b] + gamma));
                CHECK(shifted.eval(beta).is_zero());
            }
    }
}

TEST_CASE("factoring monic cubics") {
    RationalCubic f(Rational(-20), Rational(53), Rational(-34));
    RootData rd = root_data_of(f);
    REQUIRE(rd.split());
    CHECK(rd.roots == std::vector<Rational>{Rational(1), Rational(2), Rational(17)});

    RootData irr = root_data_of(RationalCubic(Rational(0), Rational(1), Rational(1)));
    CHECK(irr.irreducible);

    RationalCubic lq = RationalCubic::from_linear_quadratic(Rational(3), Rational(0), Rational(-2));
    RationalCubic same(lq.a(), lq.b(), lq.c());
    RootData rd2 = root_data_of(same);
    REQUIRE(rd2.quad.has_value());
    CHECK(rd2.roots == std::vector<Rational>{Rational(3)});
    CHECK(rd2.quad->sum.is_zero());
    CHECK(rd2.quad->prod == Rational(-2));

    // a quadratic datum with square discriminant splits
    RationalCubic sp = RationalCubic::from_linear_quadratic(Rational(5), Rational(3), Rational(2));
    REQUIRE(sp.root_data()->split());
    CHECK(sp.root_data()->roots == std::vector<Rational>{Rational(1), Rational(2), Rational(5)});
}
