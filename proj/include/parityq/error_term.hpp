#pragma once

#include "parityq/cubic.hpp"
#include "parityq/hilbert.hpp"

namespace parityq {

// The local error term: (b,-c)(-2L,Delta)(L,-b) when b and L are nonzero,
// (-c,-1)(2c,Delta) otherwise. Defined at every place.
inline int error_term_H(const RationalCubic& f, const Place& v) {
    const Rational& b = f.b();
    const Rational& c = f.c();
    const Rational& L = f.L();
    const Rational& D = f.delta();
    if (!b.is_zero() && !L.is_zero()) {
        return hilbert(b, -c, v) * hilbert(Rational(-2) * L, D, v) * hilbert(L, -b, v);
    }
    return hilbert(-c, Rational(-1), v) * hilbert(Rational(2) * c, D, v);
}

}  // namespace parityq
