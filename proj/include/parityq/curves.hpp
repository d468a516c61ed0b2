#pragma once

#include "parityq/cubic.hpp"
#include "parityq/poly.hpp"

namespace parityq {

// The four models attached to a cubic f:
//   E:    y^2 = f(x)
//   E':   y^2 = x f(x)
//   JacE': y^2 = x^3 + b x^2 + ac x + c^2   (roots -a_i a_j)
//   C:    y^2 = f(x^2)
struct CurveFamily {
    RationalCubic E;
    UniPoly Eprime;
    RationalCubic jacEprime;
    UniPoly C;
};

inline CurveFamily build_family(const RationalCubic& f) {
    return CurveFamily{f, UniPoly::x() * f.poly(), jac_cubic(f), f.poly().subst_x_squared()};
}

}  // namespace parityq
