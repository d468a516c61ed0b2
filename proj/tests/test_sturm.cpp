#include <doctest.h>

#include "oracles.hpp"
#include "parityq/generate.hpp"
#include "parityq/sturm.hpp"

using namespace parityq;

TEST_CASE("golden chains") {
    // x^3 + x + 1: derived by hand division before freezing
    UniPoly f({Rational(1), Rational(1), Rational(0), Rational(1)});
    SturmSequence s = sturm_sequence(f);
    REQUIRE(s.polys.size() == 4);
    CHECK(s.polys[1] == UniPoly({Rational(1), Rational(0), Rational(3)}));
    CHECK(s.polys[2] == UniPoly({Rational(-1), Rational(Int(-2), Int(3))}));
    CHECK(s.polys[3] == UniPoly::constant(Rational(Int(-31), Int(4))));
    CHECK_FALSE(s.degenerate);
    CHECK(s.squarefree);

    // (x-1)(x-2)(x-3)(x-4)
    UniPoly q = poly_from_roots({Rational(1), Rational(2), Rational(3), Rational(4)});
    SturmSequence sq = sturm_sequence(q);
    REQUIRE(sq.polys.size() == 5);
    CHECK(sq.polys[2] == UniPoly({Rational(Int(29), Int(4)), Rational(Int(-25), Int(4)),
                                  Rational(Int(5), Int(4))}));
    CHECK(sq.polys[3] == UniPoly({Rational(-8), Rational(Int(16), Int(5))}));
    CHECK(sq.polys[4] == UniPoly::constant(Rational(Int(9), Int(16))));
    CHECK_FALSE(sq.degenerate);
    // sigma(0) = 4 with signs +,-,+,-,+ and sigma(+inf) = 0
    CHECK(sign_changes(sq, SturmPoint::at(Rational(0))) == 4);
    CHECK(sign_changes(sq, SturmPoint::pos_inf()) == 0);

    // x^2 - 1 -> chain (x^2-1, 2x, 1)
    UniPoly x2({Rational(-1), Rational(0), Rational(1)});
    SturmSequence s2 = sturm_sequence(x2);
    REQUIRE(s2.polys.size() == 3);
    CHECK(s2.polys[2] == UniPoly::constant(Rational(1)));

    // (x-1)^2 terminates early and is not squarefree
    UniPoly d({Rational(1), Rational(-2), Rational(1)});
    SturmSequence sd = sturm_sequence(d);
    CHECK(sd.degenerate);
    CHECK_FALSE(sd.squarefree);

    CHECK_THROWS_AS(sturm_sequence(UniPoly::constant(Rational(3))), DegreeTooSmall);
}

TEST_CASE("root counting") {
    UniPoly f({Rational(1), Rational(1), Rational(0), Rational(1)});
    CHECK(count_real_roots(f) == 1);
    CHECK(sign_changes(sturm_sequence(f), SturmPoint::neg_inf()) == 2);
    CHECK(sign_changes(sturm_sequence(f), SturmPoint::pos_inf()) == 1);

    UniPoly g = poly_from_roots({Rational(1), Rational(2), Rational(3)});
    CHECK(count_positive_roots(g) == 3);
    UniPoly q = poly_from_roots({Rational(1), Rational(2), Rational(3), Rational(4)});
    CHECK(count_positive_roots(q) == 4);
    CHECK(count_roots(q, SturmPoint::at(Rational(1)), SturmPoint::at(Rational(3))) == 2);

    CHECK_THROWS_AS(count_real_roots(UniPoly({Rational(1), Rational(-2), Rational(1)})),
                    NotSquarefree);

    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        int deg = 3 + (int)(i % 2);
        auto roots = rand_distinct_roots(rng, deg, 60, true);
        UniPoly h = poly_from_roots(roots);
        oracles::Interval iv;
        iv.lo_inf = -1;
        iv.hi_inf = +1;
        CHECK(count_real_roots(h) == oracles::count_in(roots, iv));
        oracles::Interval pos{0, Rational(0), +1, Rational(0)};
        CHECK(count_positive_roots(h) == oracles::count_in(roots, pos));
        Rational a{Int(rng.range(-50, 50)), Int(rng.range(1, 4))};
        Rational b = a + Rational(Int(rng.range(0, 80)), Int(rng.range(1, 4)));
        oracles::Interval win{0, a, 0, b};
        CHECK(count_roots(h, SturmPoint::at(a), SturmPoint::at(b)) ==
              oracles::count_in(roots, win));
    }
}

TEST_CASE("chain symbol product") {
    // cubic: equals the error term at 3 (pinned) and everywhere (property)
    UniPoly f({Rational(1), Rational(1), Rational(0), Rational(1)});
    CHECK(generalized_H(f, Place::padic(3)) == 1);
    CHECK(cubic_consistency(RationalCubic(Rational(0), Rational(1), Rational(1))));

    // quartic at the real place: the six symbol factors multiply to +1
    UniPoly q = poly_from_roots({Rational(1), Rational(2), Rational(3), Rational(4)});
    CHECK(generalized_H(q, Place::real()) == 1);
    CHECK(generalized_product_check(q) == 1);

    // degree drop: x^4 + x + 1 has deg P2 = 1
    UniPoly bad({Rational(1), Rational(1), Rational(0), Rational(0), Rational(1)});
    CHECK_THROWS_AS(generalized_H(bad, Place::real()), DegenerateSturm);

    // b = 0 or L = 0 surfaces as a degenerate chain for cubics
    CHECK_THROWS_AS(cubic_consistency(RationalCubic(Rational(0), Rational(0), Rational(1))),
                    DegenerateSturm);
    CHECK_THROWS_AS(cubic_consistency(RationalCubic(Rational(1), Rational(9), Rational(1))),
                    DegenerateSturm);  // L = ab - 9c = 0
}

TEST_CASE("chain product under square rescaling") {
    // f(x) -> s^-d f(sx) with s a nonzero square rescales every symbol entry
    // by squares; the product is unchanged.
    Rng rng(23);
    for (int i = 0; i < 60; ++i) {
        auto roots = rand_distinct_roots(rng, 3 + (int)(i % 2), 20, false);
        UniPoly f = poly_from_roots(roots);
        SturmSequence s = sturm_sequence(f);
        if (s.degenerate) continue;
        Rational t = rand_rational(rng, 7, 4);
        Rational sc = t * t;
        long d = f.degree();
        std::vector<Rational> c;
        for (long k = 0; k <= d; ++k) c.push_back(f.coeff(k) * sc.pow(k - d));
        UniPoly g(std::move(c));
        if (sturm_sequence(g).degenerate) continue;
        for (const Place& v :
             {Place::real(), Place::padic(2), Place::padic(3), Place::padic(5)})
            CHECK(generalized_H(f, v) == generalized_H(g, v));
    }
}

TEST_CASE("degree two product formula") {
    Rng rng(29);
    for (int i = 0; i < 100; ++i) {
        auto roots = rand_distinct_roots(rng, 2, 40, false);
        UniPoly f = poly_from_roots(roots);
        if (sturm_sequence(f).degenerate) continue;
        CHECK(generalized_product_check(f) == 1);
    }
}
