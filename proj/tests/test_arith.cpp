#include <doctest.h>

#include "oracles.hpp"
#include "parityq/generate.hpp"
#include "parityq/padic.hpp"
#include "parityq/primes.hpp"

using namespace parityq;

TEST_CASE("rational normal form") {
    Rational r(Int(6), Int(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(Int(7), Int(7)).str() == "1");
    CHECK(Rational::parse("3/25") == Rational(Int(3), Int(25)));
    CHECK(Rational::parse("-4") == Rational(-4));
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), ZeroArgument);
    CHECK(Rational(Int(9), Int(4)).is_rational_square());
    CHECK_FALSE(Rational(Int(-9), Int(4)).is_rational_square());
    CHECK_FALSE(Rational(Int(2)).is_rational_square());
}

TEST_CASE("valuation and unit part") {
    CHECK(valuation(Rational(17), Int(17)) == 1);
    CHECK(valuation(Rational(Int(3), Int(25)), Int(5)) == -2);
    CHECK(valuation(Rational(18), Int(3)) == 2);
    CHECK(unit_part(Rational(18), Int(3)) == Rational(2));
    CHECK(unit_part(Rational(Int(3), Int(25)), Int(5)) == Rational(Int(75), Int(25)) / Rational(1));
    CHECK_THROWS_AS(valuation(Rational(0), Int(5)), ValuationOfZero);

    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational x = rand_rational(rng, 1000, 60);
        Int p(std::vector<long>{2, 3, 5, 13}[(std::size_t)(i % 4)]);
        CHECK(valuation(x, p) == oracles::slow_valuation(x, p));
        Rational u = unit_part(x, p);
        CHECK(valuation(u, p) == 0);
        CHECK(u * Rational(p).pow(valuation(x, p)) == x);
    }
}

TEST_CASE("legendre against residue enumeration") {
    CHECK(legendre(Rational(2), Int(17)) == 1);   // 6^2 = 36 = 2 (17)
    CHECK(legendre(Rational(2), Int(5)) == -1);   // squares mod 5: {1,4}
    CHECK(legendre(Rational(1), Int(97)) == 1);
    CHECK_THROWS_AS(legendre(Rational(5), Int(5)), NotAUnit);

    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        Int p(std::vector<long>{3, 5, 7, 11, 13, 17}[(std::size_t)(i % 6)]);
        Rational u{Int(rng.nonzero(-500, 500)), Int(rng.range(1, 40))};
        if (valuation(u, p) != 0) continue;
        Int residue = residue_mod(u, p);
        CHECK(legendre(u, p) == oracles::slow_legendre(residue, p));
    }
}

TEST_CASE("squares in completions") {
    CHECK_FALSE(is_square(Rational(-4), Place::real()));
    CHECK(is_square(Rational(-4), Place::complex()));
    CHECK_FALSE(is_square(Rational(18), Place::padic(3)));  // unit part 2 mod 3
    CHECK(is_square(Rational(Int(27), Int(2)), Place::padic(5)));
    CHECK(is_square(Rational(17), Place::padic(2)));   // 17 = 1 mod 8
    CHECK_FALSE(is_square(Rational(5), Place::padic(2)));
    CHECK_FALSE(is_square(Rational(2), Place::padic(2)));
    CHECK(is_square(Rational(4), Place::padic(2)));
    CHECK_THROWS_AS(is_square(Rational(0), Place::real()), ZeroArgument);

    // x^2 is a square everywhere; x and p*x^2 compare as expected
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        Rational x = rand_rational(rng, 100, 10);
        for (const Place& v : {Place::real(), Place::padic(2), Place::padic(7)}) {
            CHECK(is_square(x * x, v));
            if (is_square(x, v)) CHECK(hilbert(x, rand_rational(rng, 50, 5), v) == 1);
        }
    }
}

TEST_CASE("prime machinery") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(1000003)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(1000001)));  // 101 * 9901
    auto f = factorize(Int(-975));  // 3 * 5^2 * 13
    CHECK(f[Int(3)] == 1);
    CHECK(f[Int(5)] == 2);
    CHECK(f[Int(13)] == 1);
    // large semiprime: product of two 10-digit primes
    Int a("2147483647"), b("2147483629");
    auto g = factorize(a * b);
    CHECK(g[a] == 1);
    CHECK(g[b] == 1);
    auto divs = divisors_up_to(Int(12), Int(0));
    CHECK(divs == std::vector<Int>{1, 2, 3, 4, 6, 12});
}
