#pragma once

#include <set>

#include "parityq/padic.hpp"
#include "parityq/place.hpp"
#include "parityq/primes.hpp"

namespace parityq {

// Quadratic Hilbert symbol (a,b) of the completion, valued in {+1,-1}:
// +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution there.
inline int hilbert(const Rational& a, const Rational& b, const Place& v) {
    if (a.is_zero() || b.is_zero()) throw ZeroArgument("hilbert");
    switch (v.kind()) {
        case Place::Kind::Complex:
            return 1;
        case Place::Kind::Real:
            return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
        case Place::Kind::Padic:
            break;
    }
    const Int& p = v.p();
    long alpha = valuation(a, p);
    long beta = valuation(b, p);
    Rational u = a / Rational(p).pow(alpha);
    Rational w = b / Rational(p).pow(beta);
    if (p == 2) {
        long e = (long)eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
        return (e % 2 == 0) ? 1 : -1;
    }
    long e = 0;
    if ((alpha % 2) && (beta % 2) && int_mod(p, 4) == 3) e = 1;  // (-1)^{ab(p-1)/2}
    int s = (e % 2 == 0) ? 1 : -1;
    if (beta % 2) s *= legendre(u, p);
    if (alpha % 2) s *= legendre(w, p);
    return s;
}

// The finite set of places where (a,b) = -1: real, 2-adic, and p-adic for the
// primes p dividing a numerator or denominator of a or b. Always has even size.
inline std::set<Place> product_formula_check(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) throw ZeroArgument("product_formula_check");
    std::set<Int> primes{Int(2)};
    for (const Int& n : {a.num(), a.den(), b.num(), b.den()}) {
        if (n == 1 || n == -1) continue;
        for (const auto& [p, e] : factorize(n)) primes.insert(p);
    }
    std::set<Place> bad;
    if (hilbert(a, b, Place::real()) == -1) bad.insert(Place::real());
    for (const Int& p : primes)
        if (hilbert(a, b, Place::padic(p)) == -1) bad.insert(Place::padic(p));
    return bad;
}

}  // namespace parityq
