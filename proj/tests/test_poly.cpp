#include <doctest.h>

#include "parityq/generate.hpp"
#include "parityq/poly.hpp"

using namespace parityq;

namespace {
UniPoly rand_poly(Rng& rng, long deg, long h) {
    std::vector<Rational> c;
    for (long k = 0; k <= deg; ++k) c.push_back(rand_rational(rng, h, 6));
    return UniPoly(std::move(c));
}
}  // namespace

TEST_CASE("division with remainder") {
    UniPoly f({Rational(1), Rational(1), Rational(0), Rational(1)});  // x^3 + x + 1
    UniPoly g({Rational(1), Rational(0), Rational(3)});               // 3x^2 + 1
    auto [q, r] = UniPoly::divmod(f, g);
    CHECK(q == UniPoly({Rational(0), Rational(Int(1), Int(3))}));
    CHECK(r == UniPoly({Rational(1), Rational(Int(2), Int(3))}));

    auto [q1, r1] = UniPoly::divmod(f, UniPoly::constant(Rational(1)));
    CHECK(q1 == f);
    CHECK(r1.is_zero());

    UniPoly x2m1({Rational(-1), Rational(0), Rational(1)});
    UniPoly xm1({Rational(-1), Rational(1)});
    auto [q2, r2] = UniPoly::divmod(x2m1, xm1);
    CHECK(q2 == UniPoly({Rational(1), Rational(1)}));
    CHECK(r2.is_zero());

    CHECK_THROWS_AS(UniPoly::divmod(f, UniPoly::zero()), DivisionByZeroPoly);
}

TEST_CASE("divmod round trip") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        UniPoly num = rand_poly(rng, rng.range(0, 6), 40);
        UniPoly den = rand_poly(rng, rng.range(0, 4), 40);
        if (den.is_zero()) continue;
        auto [q, r] = UniPoly::divmod(num, den);
        CHECK(q * den + r == num);
        if (!r.is_zero()) CHECK(r.degree() < den.degree());
    }
}

TEST_CASE("composition and substitution") {
    UniPoly f({Rational(1), Rational(1), Rational(0), Rational(1)});  // x^3 + x + 1
    CHECK(f.subst_x_squared() ==
          UniPoly({Rational(1), Rational(0), Rational(1), Rational(0), Rational(0), Rational(0),
                   Rational(1)}));  // x^6 + x^2 + 1
    // f(x - 1) evaluated by both routes
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        Rational s = rand_rational(rng, 9, 4);
        Rational t = rand_rational(rng, 9, 4);
        Rational x = rand_rational(rng, 9, 4);
        UniPoly g = f.compose_linear(s, t);
        CHECK(g.eval(x) == f.eval(s * x + t));
    }
    CHECK(f.str() == "x^3 + x + 1");
    CHECK(UniPoly({Rational(-34), Rational(53), Rational(-20), Rational(1)}).str() ==
          "x^3 - 20*x^2 + 53*x - 34");
}
