#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "parityq/padic.hpp"
#include "parityq/poly.hpp"
#include "parityq/primes.hpp"

namespace parityq {

// Monic irreducible-over-Q quadratic x^2 - sum*x + prod (a conjugate root pair).
struct QuadFactor {
    Rational sum, prod;
};

// Factorization of a monic cubic into monic factors of degree <= 2, or an
// irreducibility flag. Rational roots are listed ascending.
struct RootData {
    std::vector<Rational> roots;
    std::optional<QuadFactor> quad;
    bool irreducible = false;

    bool split() const { return roots.size() == 3; }
};

// Monic cubic x^3 + a x^2 + b x + c over Q with c != 0 and nonzero discriminant.
class RationalCubic {
public:
    RationalCubic(Rational a, Rational b, Rational c,
                  std::optional<RootData> roots = std::nullopt)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), roots_(std::move(roots)) {
        if (c_.is_zero()) throw RootAtZero();
        L_ = a_ * b_ - Rational(9) * c_;
        delta_ = Rational(18) * a_ * b_ * c_ - Rational(4) * a_.pow(3) * c_ +
                 a_.pow(2) * b_.pow(2) - Rational(4) * b_.pow(3) - Rational(27) * c_.pow(2);
        if (delta_.is_zero()) throw NotSeparable();
    }

    static RationalCubic from_roots(const Rational& r1, const Rational& r2, const Rational& r3) {
        if (r1 == r2 || r1 == r3 || r2 == r3) throw NotSeparable();
        if (r1.is_zero() || r2.is_zero() || r3.is_zero()) throw RootAtZero();
        RootData rd;
        rd.roots = {r1, r2, r3};
        std::sort(rd.roots.begin(), rd.roots.end());
        return RationalCubic(-(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -(r1 * r2 * r3),
                             std::move(rd));
    }

    // (x - r)(x^2 - sum*x + prod); splits fully if the quadratic is reducible.
    static RationalCubic from_linear_quadratic(const Rational& r, const Rational& sum,
                                               const Rational& prod) {
        Rational disc = sum * sum - Rational(4) * prod;
        if (disc.is_zero()) throw NotSeparable();
        if (disc.is_rational_square()) {
            Rational s(Int(int_sqrt(disc.num())), Int(int_sqrt(disc.den())));
            return from_roots(r, (sum + s) / Rational(2), (sum - s) / Rational(2));
        }
        if (r.is_zero() || prod.is_zero()) throw RootAtZero();
        RootData rd;
        rd.roots = {r};
        rd.quad = QuadFactor{sum, prod};
        return RationalCubic(-(r + sum), prod + r * sum, -(r * prod), std::move(rd));
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& L() const { return L_; }
    const Rational& delta() const { return delta_; }
    const std::optional<RootData>& root_data() const { return roots_; }

    bool is_integral() const { return a_.is_integer() && b_.is_integer() && c_.is_integer(); }

    UniPoly poly() const { return UniPoly({c_, b_, a_, Rational(1)}); }
    Rational eval(const Rational& x) const { return ((x + a_) * x + b_) * x + c_; }

    RationalCubic with_root_data(RootData rd) const {
        return RationalCubic(a_, b_, c_, std::move(rd));
    }

    friend bool operator==(const RationalCubic& f, const RationalCubic& g) {
        return f.a_ == g.a_ && f.b_ == g.b_ && f.c_ == g.c_;
    }

    std::string str() const { return poly().str(); }

private:
    Rational a_, b_, c_, L_, delta_;
    std::optional<RootData> roots_;
};

struct CubicInvariants {
    Rational b, c, L, delta;
};

inline CubicInvariants invariants(const RationalCubic& f) {
    return {f.b(), f.c(), f.L(), f.delta()};
}

// Minimal positive integer d with (d^2 a, d^4 b, d^6 c) integral, and the
// rescaled cubic. Root data transports as roots*d^2, (sum*d^2, prod*d^4).
inline std::pair<RationalCubic, Int> integralize(const RationalCubic& g) {
    std::map<Int, long> exponents;
    auto need = [&](const Rational& x, long weight) {
        if (x.is_zero() || x.is_integer()) return;
        for (const auto& [p, e] : factorize(x.den())) {
            long needed = (e + weight - 1) / weight;  // ceil(e / weight)
            auto it = exponents.find(p);
            if (it == exponents.end() || it->second < needed) exponents[p] = needed;
        }
    };
    need(g.a(), 2);
    need(g.b(), 4);
    need(g.c(), 6);
    Int d = 1;
    for (const auto& [p, e] : exponents) d *= int_pow(p, (unsigned long)e);
    if (d == 1) return {g, d};
    Rational d2 = Rational(d * d);
    std::optional<RootData> rd;
    if (g.root_data()) {
        rd = RootData{};
        for (const auto& r : g.root_data()->roots) rd->roots.push_back(r * d2);
        if (g.root_data()->quad)
            rd->quad = QuadFactor{g.root_data()->quad->sum * d2,
                                  g.root_data()->quad->prod * d2 * d2};
        rd->irreducible = g.root_data()->irreducible;
    }
    return {RationalCubic(g.a() * d2, g.b() * d2 * d2, g.c() * d2 * d2 * d2, std::move(rd)), d};
}

// Factors a monic cubic over Q. Pure; prefers stored root data when present.
inline RootData root_data_of(const RationalCubic& f) {
    if (f.root_data()) return *f.root_data();
    auto [fi, d] = integralize(f);
    // Integer roots of the integral model divide its constant term and obey
    // the Cauchy bound 1 + max |coeff|.
    Int bound = 1 + std::max({::abs(fi.a().num()), ::abs(fi.b().num()), ::abs(fi.c().num())});
    std::vector<Rational> roots;
    for (const Int& dv : divisors_up_to(fi.c().num(), bound)) {
        for (int sign : {1, -1}) {
            Rational cand{Int(sign * dv)};
            if (fi.eval(cand).is_zero()) roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    RootData rd;
    Rational d2 = Rational(d * d);
    if (roots.size() == 3) {
        for (auto& r : roots) rd.roots.push_back(r / d2);
    } else if (roots.size() == 1) {
        Rational r = roots[0];
        Rational sum = -fi.a() - r;
        Rational prod = -fi.c() / r;
        rd.roots = {r / d2};
        rd.quad = QuadFactor{sum / d2, prod / (d2 * d2)};
    } else if (roots.empty()) {
        rd.irreducible = true;
    } else {
        // A monic cubic has 0, 1 or 3 rational roots.
        throw Error("internal: inconsistent rational root count");
    }
    return rd;
}

// The cubic with roots -a_i a_j (pairwise products of the roots of f, negated):
// x^3 + b x^2 + ac x + c^2. Root-free in the coefficients.
inline RationalCubic jac_cubic(const RationalCubic& f) {
    std::optional<RootData> rd;
    if (f.root_data()) {
        const RootData& in = *f.root_data();
        rd = RootData{};
        if (in.split()) {
            const auto& r = in.roots;
            rd->roots = {-(r[1] * r[2]), -(r[0] * r[2]), -(r[0] * r[1])};
            std::sort(rd->roots.begin(), rd->roots.end());
        } else if (in.quad) {
            const Rational& r = in.roots[0];
            rd->roots = {-in.quad->prod};
            rd->quad = QuadFactor{-(r * in.quad->sum), r * r * in.quad->prod};
        } else {
            rd->irreducible = true;
        }
    }
    return RationalCubic(f.b(), f.a() * f.c(), f.c() * f.c(), std::move(rd));
}

// The 2-torsion-preserving partner: shift the roots by gamma, then take the
// negated pairwise products. Requires f(-gamma) != 0.
inline RationalCubic gamma_shift(const RationalCubic& f, const Rational& gamma) {
    if (f.eval(-gamma).is_zero()) throw RootAtZero();
    UniPoly shifted = f.poly().compose_linear(Rational(1), -gamma);
    std::optional<RootData> rd;
    if (f.root_data()) {
        const RootData& in = *f.root_data();
        rd = RootData{};
        for (const auto& r : in.roots) rd->roots.push_back(r + gamma);
        std::sort(rd->roots.begin(), rd->roots.end());
        if (in.quad)
            rd->quad = QuadFactor{in.quad->sum + Rational(2) * gamma,
                                  in.quad->prod + in.quad->sum * gamma + gamma * gamma};
        rd->irreducible = in.irreducible;
    }
    RationalCubic fg(shifted.coeff(2), shifted.coeff(1), shifted.coeff(0), std::move(rd));
    return jac_cubic(fg);
}

}  // namespace parityq
