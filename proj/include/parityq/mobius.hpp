#pragma once

#include <array>
#include <optional>
#include <string>

#include "parityq/cubic.hpp"
#include "parityq/poly.hpp"

namespace parityq {

using RootTriple = std::array<Rational, 3>;

enum class MobiusBranch { General, QuadraticTwist, XfForm };

inline std::string branch_name(MobiusBranch b) {
    switch (b) {
        case MobiusBranch::General: return "general";
        case MobiusBranch::QuadraticTwist: return "quadratic-twist";
        default: return "xf-form";
    }
}

// The Moebius transformation h(z) = (Dz - B)/(A - Cz) carrying alpha_i to
// beta_i, with A, B, C, D the four symmetric expressions in the two root
// triples. AD - BC != 0 whenever both triples are separable.
struct MobiusMatch {
    RootTriple alphas, betas;
    Rational A, B, C, D;
    MobiusBranch branch;

    Rational apply(const Rational& z) const {
        Rational den = A - C * z;
        if (den.is_zero()) throw ZeroArgument("moebius pole");
        return (D * z - B) / den;
    }
};

inline MobiusMatch mobius_match(const RootTriple& alphas, const RootTriple& betas) {
    for (const auto* t : {&alphas, &betas}) {
        if ((*t)[0] == (*t)[1] || (*t)[0] == (*t)[2] || (*t)[1] == (*t)[2])
            throw NotSeparable();
        for (const auto& r : *t)
            if (r.is_zero()) throw RootAtZero();
    }
    const Rational &a1 = alphas[0], &a2 = alphas[1], &a3 = alphas[2];
    const Rational &b1 = betas[0], &b2 = betas[1], &b3 = betas[2];
    MobiusMatch m;
    m.alphas = alphas;
    m.betas = betas;
    m.A = a1 * a2 * (b1 - b2) + a3 * a1 * (b3 - b1) + a2 * a3 * (b2 - b3);
    m.B = a1 * a2 * b3 * (b2 - b1) + a3 * a1 * b2 * (b1 - b3) + a2 * a3 * b1 * (b3 - b2);
    m.C = b1 * (a2 - a3) + b2 * (a3 - a1) + b3 * (a1 - a2);
    m.D = b1 * b2 * (a1 - a2) + b2 * b3 * (a2 - a3) + b3 * b1 * (a3 - a1);
    if ((m.A * m.D - m.B * m.C).is_zero())
        throw Error("internal: degenerate matching transformation");
    for (int i = 0; i < 3; ++i)
        if (m.apply(alphas[(std::size_t)i]) != betas[(std::size_t)i])
            throw Error("internal: transformation fails to match the roots");
    if (m.A.is_zero()) m.branch = MobiusBranch::XfForm;
    else if (m.C.is_zero()) m.branch = MobiusBranch::QuadraticTwist;
    else m.branch = MobiusBranch::General;
    return m;
}

// Normal form of the second curve against the first:
//   general:         d y^2 = x' f(x'),  x' = 1 - (C/A) x,  f monic with
//                    roots 1 - (C/A) alpha_i
//   quadratic twist: y^2 = d g1(x) with d = (D/A)^3
//   xf form:         d y^2 = x g1(x) with d = -C a1 a2 a3 / B
struct NormalForm {
    MobiusBranch branch;
    Rational d;
    std::optional<RationalCubic> f_new;  // general branch only
};

inline NormalForm normal_form(const MobiusMatch& m, const RationalCubic& g1) {
    for (const auto& a : m.alphas)
        if (!g1.eval(a).is_zero())
            throw BranchMismatch("g1 does not vanish at the matched roots");
    NormalForm out;
    out.branch = m.branch;
    Rational prod_roots = m.alphas[0] * m.alphas[1] * m.alphas[2];
    switch (m.branch) {
        case MobiusBranch::XfForm:
            out.d = -(m.C * prod_roots) / m.B;
            return out;
        case MobiusBranch::QuadraticTwist:
            out.d = (m.D / m.A).pow(3);
            return out;
        case MobiusBranch::General:
            break;
    }
    Rational ca = m.C / m.A;
    RootTriple w;
    for (int i = 0; i < 3; ++i) w[(std::size_t)i] = Rational(1) - ca * m.alphas[(std::size_t)i];
    out.f_new = RationalCubic::from_roots(w[0], w[1], w[2]);
    Rational prod_acai(1);
    for (const auto& a : m.alphas) prod_acai *= (m.A - m.C * a);
    out.d = -(m.A.pow(4) * prod_acai) / (m.C.pow(3) * (m.A * m.D - m.B * m.C));
    return out;
}

// g2(h(x)) * (A - Cx)^3 as a polynomial: sum of g2's coefficients against
// (Dx-B)^k (A-Cx)^{3-k}.
inline UniPoly mobius_numerator(const MobiusMatch& m, const RationalCubic& g2) {
    UniPoly num({-m.B, m.D});
    UniPoly den({m.A, -m.C});
    UniPoly acc = UniPoly::zero();
    const Rational coeffs[4] = {g2.c(), g2.b(), g2.a(), Rational(1)};
    for (int k = 0; k <= 3; ++k) {
        UniPoly term = UniPoly::constant(coeffs[k]);
        for (int i = 0; i < k; ++i) term = term * num;
        for (int i = k; i < 3; ++i) term = term * den;
        acc = acc + term;
    }
    return acc;
}

}  // namespace parityq
