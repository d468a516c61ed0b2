#pragma once

#include "parityq/place.hpp"
#include "parityq/rational.hpp"

namespace parityq {

inline long int_valuation(const Int& n, const Int& p) {
    if (sgn(n) == 0) throw ValuationOfZero();
    Int m = ::abs(n);
    long v = 0;
    Int q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (sgn(r) != 0) break;
        m = q;
        ++v;
    }
    return v;
}

// v_p(x) for nonzero rational x.
inline long valuation(const Rational& x, const Int& p) {
    if (x.is_zero()) throw ValuationOfZero();
    return int_valuation(x.num(), p) - int_valuation(x.den(), p);
}

// x / p^{v_p(x)}, a p-adic unit.
inline Rational unit_part(const Rational& x, const Int& p) {
    return x / Rational(p).pow(valuation(x, p));
}

// Residue in [0, p) of a rational with v_p(x) >= 0 and p not dividing den(x).
inline Int residue_mod(const Rational& x, const Int& p) {
    Int n = int_mod(x.num(), p);
    Int d = int_mod(x.den(), p);
    if (sgn(d) == 0) throw NotAUnit(x.str() + " mod " + p.get_str());
    Int dinv;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()) == 0)
        throw NotAUnit(x.str() + " mod " + p.get_str());
    return int_mod(n * dinv, p);
}

// Legendre symbol of a p-adic unit u at an odd prime p.
inline int legendre(const Rational& u, const Int& p) {
    if (u.is_zero() || valuation(u, p) != 0) throw NotAUnit(u.str() + " at " + p.get_str());
    int s = mpz_legendre(u.num().get_mpz_t(), p.get_mpz_t());
    s *= mpz_legendre(u.den().get_mpz_t(), p.get_mpz_t());
    return s;
}

// u mod 8 for a 2-adic unit; odd d satisfies d^{-1} = d (mod 8).
inline int mod8_of_unit(const Rational& u) {
    Int n = int_mod(u.num(), 8);
    Int d = int_mod(u.den(), 8);
    return (int)int_mod(n * d, 8).get_ui();
}

// (u-1)/2 mod 2 for a 2-adic unit.
inline int eps2(const Rational& u) {
    int m = mod8_of_unit(u) % 4;
    return m == 3 ? 1 : 0;
}

// (u^2-1)/8 mod 2 for a 2-adic unit.
inline int omega2(const Rational& u) {
    int m = mod8_of_unit(u);
    return (m == 3 || m == 5) ? 1 : 0;
}

// Square in the completion at the place. Real: positive. Complex: always.
// Odd p: even valuation and unit part a residue square. p = 2: even valuation
// and unit part = 1 mod 8.
inline bool is_square(const Rational& x, const Place& v) {
    if (x.is_zero()) throw ZeroArgument("is_square");
    switch (v.kind()) {
        case Place::Kind::Real: return x.sign() > 0;
        case Place::Kind::Complex: return true;
        case Place::Kind::Padic: break;
    }
    const Int& p = v.p();
    long val = valuation(x, p);
    if (val % 2 != 0) return false;
    Rational u = x / Rational(p).pow(val);
    if (p == 2) return mod8_of_unit(u) == 1;
    return legendre(u, p) == 1;
}

}  // namespace parityq
