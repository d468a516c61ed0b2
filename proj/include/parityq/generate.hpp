#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "parityq/cluster.hpp"
#include "parityq/cubic.hpp"
#include "parityq/mobius.hpp"
#include "parityq/padic.hpp"

namespace parityq {

// Deterministic 64-bit generator (splitmix64); the seed fixes every stream.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    long range(long lo, long hi) {  // inclusive
        return lo + (long)below((std::uint64_t)(hi - lo + 1));
    }

    long nonzero(long lo, long hi) {
        long v;
        do { v = range(lo, hi); } while (v == 0);
        return v;
    }

    bool coin() { return (next() & 1) != 0; }

    // Per-index substream, independent of how work is partitioned.
    Rng fork(std::uint64_t index) const {
        Rng r(state ^ (0xD1B54A32D192ED03ull * (index + 1)));
        r.next();
        return r;
    }
};

// Small rational with numerator up to hmax and denominator up to dmax.
inline Rational rand_rational(Rng& rng, long hmax, long dmax) {
    return Rational(Int(rng.nonzero(-hmax, hmax)), Int(rng.range(1, dmax)));
}

// Monic integral cubic with coefficients in [-height, height], c != 0, separable.
inline RationalCubic rand_integral_cubic(Rng& rng, long height) {
    for (;;) {
        long a = rng.range(-height, height);
        long b = rng.range(-height, height);
        long c = rng.nonzero(-height, height);
        try {
            return RationalCubic(Rational(Int(a)), Rational(Int(b)), Rational(Int(c)));
        } catch (const NotSeparable&) {
        }
    }
}

inline RationalCubic rand_split_cubic(Rng& rng, long height) {
    for (;;) {
        long r1 = rng.nonzero(-height, height);
        long r2 = rng.nonzero(-height, height);
        long r3 = rng.nonzero(-height, height);
        if (r1 == r2 || r1 == r3 || r2 == r3) continue;
        return RationalCubic::from_roots(Rational(Int(r1)), Rational(Int(r2)), Rational(Int(r3)));
    }
}

// Monic polynomial with the given distinct rational roots.
inline UniPoly poly_from_roots(const std::vector<Rational>& roots) {
    UniPoly p = UniPoly::constant(Rational(1));
    for (const auto& r : roots) p = p * UniPoly({-r, Rational(1)});
    return p;
}

inline std::vector<Rational> rand_distinct_roots(Rng& rng, int count, long height, bool allow_zero) {
    std::vector<Rational> roots;
    while ((int)roots.size() < count) {
        long num = allow_zero ? rng.range(-height, height) : rng.nonzero(-height, height);
        Rational r{Int(num), Int(rng.range(1, 3))};
        bool dup = false;
        for (const auto& q : roots) dup = dup || q == r;
        if (!dup) roots.push_back(r);
    }
    return roots;
}

// ---------------------------------------------------------------------------
// Real-case constrained cubics (sign pattern of the roots fixes the case).
// ---------------------------------------------------------------------------
inline RationalCubic rand_real_case(Rng& rng, int case_id, long height = 50) {
    if (case_id >= 1 && case_id <= 4) {
        int positives = 4 - case_id;
        for (;;) {
            std::vector<Rational> roots;
            for (int i = 0; i < 3; ++i) {
                long mag = rng.range(1, height);
                long den = rng.range(1, 3);
                int sign = (i < positives) ? 1 : -1;
                roots.push_back(Rational(Int(sign * mag), Int(den)));
            }
            if (roots[0] == roots[1] || roots[0] == roots[2] || roots[1] == roots[2]) continue;
            return RationalCubic::from_roots(roots[0], roots[1], roots[2]);
        }
    }
    // one real root: attach a complex conjugate quadratic pair
    int sign = (case_id == 6) ? 1 : -1;
    for (;;) {
        Rational r{Int(sign * rng.range(1, height)), Int(rng.range(1, 3))};
        Rational sum{Int(rng.range(-height, height)), Int(rng.range(1, 3))};
        Rational prod = sum * sum / Rational(4) + Rational(Int(rng.range(1, height)), Int(rng.range(1, 3)));
        try {
            return RationalCubic::from_linear_quadratic(r, sum, prod);
        } catch (const Error&) {
        }
    }
}

// ---------------------------------------------------------------------------
// Constrained instances for the multiplicative reduction rows at odd p.
// ---------------------------------------------------------------------------
enum class TwinFlavor {
    LinearZero,    // rational root congruent to 0
    QuadZero,      // quadratic-factor root congruent to 0
    RationalPair,  // two rational roots collide (even n)
    RamifiedQuad,  // ramified quadratic pair (odd n)
    InertQuad,     // unramified non-split quadratic pair (even n)
    SplitMixed     // rational root collides with a quadratic root (even n)
};

namespace detail {

inline Int residue_with_legendre(Rng& rng, const Int& p, int target,
                                 const std::set<Int>& avoid = {}) {
    for (;;) {
        Int r{(long)rng.below((std::uint64_t)(p.get_ui() - 1)) + 1};
        if (avoid.count(r)) continue;
        if (mpz_legendre(r.get_mpz_t(), p.get_mpz_t()) == target) return r;
    }
}

// Lift a nonzero residue to an integer with the same class mod p.
inline Int lift(Rng& rng, const Int& p, const Int& residue, long spread = 3) {
    return residue + p * Int(rng.range(-spread, spread));
}

}  // namespace detail

// Builds a cubic whose cluster picture at p is the requested row with the
// requested index n, planting the twin by residue arithmetic.
inline RationalCubic rand_table2_instance(Rng& rng, const Int& p, ReductionRow row, long n,
                                          TwinFlavor flavor) {
    using detail::lift;
    using detail::residue_with_legendre;
    Int pn = int_pow(p, (unsigned long)n);

    if (row == ReductionRow::Good) {
        for (;;) {
            Int t1{(long)rng.below(p.get_ui() - 1) + 1};
            Int t2{(long)rng.below(p.get_ui() - 1) + 1};
            Int t3{(long)rng.below(p.get_ui() - 1) + 1};
            if (t1 == t2 || t1 == t3 || t2 == t3) continue;
            return RationalCubic::from_roots(Rational(lift(rng, p, t1)),
                                             Rational(lift(rng, p, t2)),
                                             Rational(lift(rng, p, t3)));
        }
    }

    if (row == ReductionRow::OneNPlus || row == ReductionRow::OneNMinus) {
        int sEp = (row == ReductionRow::OneNPlus) ? 1 : -1;
        if (flavor == TwinFlavor::QuadZero) {
            // f = (x - r)(x^2 - s x + p^n u); twin {0, quad root}, sign from r*s
            Int s = residue_with_legendre(rng, p, rng.coin() ? 1 : -1);
            Int u{(long)rng.below(p.get_ui() - 1) + 1};
            int legs = mpz_legendre(s.get_mpz_t(), p.get_mpz_t());
            Int r = residue_with_legendre(rng, p, sEp * legs, {int_mod(s, p)});
            for (long bump = 0;; ++bump) {
                Rational sum{lift(rng, p, s)};
                Rational prod{pn * (u + p * bump)};
                Rational disc = sum * sum - Rational(4) * prod;
                if (disc.is_rational_square() || disc.is_zero()) continue;
                return RationalCubic::from_linear_quadratic(Rational(lift(rng, p, r)), sum, prod);
            }
        }
        // linear flavor: root of exact valuation n plus two unit roots
        Int t2{(long)rng.below(p.get_ui() - 1) + 1};
        int leg2 = mpz_legendre(t2.get_mpz_t(), p.get_mpz_t());
        Int t3 = residue_with_legendre(rng, p, sEp * leg2, {t2});
        Int u1{(long)rng.below(p.get_ui() - 1) + 1};
        Rational a1{pn * lift(rng, p, u1)};
        Rational a2{lift(rng, p, t2)};
        Rational a3{lift(rng, p, t3)};
        return RationalCubic::from_roots(a1, a2, a3);
    }

    // I rows: signs (sE, sEp) select the row
    int sE = (row == ReductionRow::InnPlusPlus || row == ReductionRow::InnA) ? 1 : -1;
    int sEp = (row == ReductionRow::InnPlusPlus || row == ReductionRow::InnB) ? 1 : -1;

    if (flavor == TwinFlavor::RationalPair) {
        if (n % 2 != 0) throw Error("rational pair twins need even n");
        Int pm = int_pow(p, (unsigned long)(n / 2));
        Int t = residue_with_legendre(rng, p, sE * sEp);
        Int delta = residue_with_legendre(rng, p, sE, {t});  // alpha1 = t - delta != 0 mod p
        Int a1res = int_mod(t - delta, p);
        Int a2 = lift(rng, p, t);
        Int w{(long)rng.below(p.get_ui() - 1) + 1};
        Rational alpha1{lift(rng, p, a1res)};
        Rational alpha2{a2};
        Rational alpha3{a2 + pm * w};
        return RationalCubic::from_roots(alpha1, alpha2, alpha3);
    }

    if (flavor == TwinFlavor::SplitMixed) {
        if (n % 2 != 0) throw Error("split mixed twins need even n");
        long m = n / 2;
        Int pm = int_pow(p, (unsigned long)m);
        Int w = residue_with_legendre(rng, p, sE);
        Int r = residue_with_legendre(rng, p, sE * sEp, {int_mod(w, p)});  // r != w mod p
        Int rlift = lift(rng, p, r);
        Int sigma = 2 * rlift - w + 2 * pm;
        for (Int k = 1;; k += 1) {
            Int disc = w * w + 4 * int_pow(p, (unsigned long)(m + 2)) * k;
            if (is_perfect_square(disc)) continue;
            Int pi4 = sigma * sigma - disc;
            if (int_mod(pi4, 4) != 0) continue;
            return RationalCubic::from_linear_quadratic(Rational(rlift), Rational(sigma),
                                                        Rational(pi4 / 4));
        }
    }

    // quadratic pair flavors: sigma = 2s, pi = s^2 - p^n w
    bool inert = (flavor == TwinFlavor::InertQuad);
    if (inert && n % 2 != 0) throw Error("inert quadratic twins need even n");
    if (!inert && n % 2 == 0) throw Error("ramified quadratic twins need odd n");
    Int s = residue_with_legendre(rng, p, sE * sEp);
    Int delta = residue_with_legendre(rng, p, sE, {s});
    Int a1res = int_mod(s - delta, p);
    Int slift = lift(rng, p, s);
    Int w = inert ? residue_with_legendre(rng, p, -1) : Int{(long)rng.below(p.get_ui() - 1) + 1};
    for (Int bump = 0;; bump += 1) {
        Int wl = w + p * bump;
        if (int_mod(wl, p) == 0) continue;
        Rational sum{2 * slift};
        Rational prod{slift * slift - pn * wl};
        Rational disc = sum * sum - Rational(4) * prod;
        if (disc.is_zero() || disc.is_rational_square()) continue;
        if (prod.is_zero()) continue;
        return RationalCubic::from_linear_quadratic(Rational(lift(rng, p, a1res)), sum, prod);
    }
}

// A flavor compatible with the row and index, weighted toward the simplest.
inline TwinFlavor pick_flavor(Rng& rng, ReductionRow row, long n) {
    if (row == ReductionRow::OneNPlus || row == ReductionRow::OneNMinus)
        return rng.below(3) == 0 ? TwinFlavor::QuadZero : TwinFlavor::LinearZero;
    if (n % 2 != 0) return TwinFlavor::RamifiedQuad;
    switch (rng.below(4)) {
        case 0: return TwinFlavor::InertQuad;
        case 1: return TwinFlavor::SplitMixed;
        default: return TwinFlavor::RationalPair;
    }
}

// ---------------------------------------------------------------------------
// Congruent perturbations (factor-level, so the pair stays classifiable).
// ---------------------------------------------------------------------------
inline RationalCubic perturb_congruent(Rng& rng, const RationalCubic& f, const Int& p, long N) {
    Int pN = int_pow(p, (unsigned long)N);
    auto bump = [&]() { return Rational(pN * Int(rng.range(0, 4))); };
    if (f.root_data() && f.root_data()->split()) {
        const auto& r = f.root_data()->roots;
        return RationalCubic::from_roots(r[0] + bump(), r[1] + bump(), r[2] + bump());
    }
    if (f.root_data() && f.root_data()->quad) {
        return RationalCubic::from_linear_quadratic(f.root_data()->roots[0] + bump(),
                                                    f.root_data()->quad->sum + bump(),
                                                    f.root_data()->quad->prod + bump());
    }
    return RationalCubic(f.a() + bump(), f.b() + bump(), f.c() + bump());
}

// Perturbation radius: beyond v(Delta) + v(b c L) the local data cannot move.
inline long continuity_radius(const RationalCubic& f, const Int& p) {
    long N = valuation(f.delta(), p);
    for (const Rational* x : {&f.b(), &f.c(), &f.L()})
        if (!x->is_zero()) N += valuation(*x, p) > 0 ? valuation(*x, p) : 0;
    return N + 10;
}

// ---------------------------------------------------------------------------
// Matched cubic pairs with isomorphic 2-torsion.
// ---------------------------------------------------------------------------
struct MatchedPair {
    RationalCubic f1, f2;
    RootTriple alphas, betas;  // beta_i pairs with alpha_i
    Rational gamma;
};

// Root triple of the shifted partner: beta_i = -(a_j + g)(a_k + g).
inline RootTriple shifted_partner_roots(const RootTriple& a, const Rational& g) {
    RootTriple b;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        b[(std::size_t)i] = -((a[(std::size_t)j] + g) * (a[(std::size_t)k] + g));
    }
    return b;
}

// Deterministic stream of (f, shifted partner) pairs over varying gamma;
// invalid gammas (a root at -gamma, or colliding partner roots) are skipped.
inline std::vector<MatchedPair> pair_generator(const RationalCubic& f, std::uint64_t seed,
                                               int count) {
    RootData rd = root_data_of(f);
    if (!rd.split()) throw NotSeparable();
    RootTriple a{rd.roots[0], rd.roots[1], rd.roots[2]};
    Rng rng(seed);
    std::vector<MatchedPair> out;
    while ((int)out.size() < count) {
        Rational g{Int(rng.range(-40, 40)), Int(rng.range(1, 4))};
        if (f.eval(-g).is_zero()) continue;
        RootTriple b = shifted_partner_roots(a, g);
        if (b[0] == b[1] || b[0] == b[2] || b[1] == b[2]) continue;
        if (b[0].is_zero() || b[1].is_zero() || b[2].is_zero()) continue;
        out.push_back(MatchedPair{f, gamma_shift(f, g), a, b, g});
    }
    return out;
}

}  // namespace parityq
