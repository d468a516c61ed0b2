#pragma once

#include <set>
#include <string>
#include <vector>

#include "parityq/error_term.hpp"
#include "parityq/hilbert.hpp"
#include "parityq/poly.hpp"
#include "parityq/support.hpp"

namespace parityq {

// Negated-remainder chain P0 = f, P1 = f', P_{i+1} = -(P_{i-1} mod P_i),
// stopping at the first zero remainder.
struct SturmSequence {
    std::vector<UniPoly> polys;
    std::vector<Rational> constants_at_zero;  // P_i(0)
    std::vector<Rational> leads;              // lead coefficient c_i
    long f_degree = 0;
    bool degenerate = false;  // degree drop > 1, early stop, or P_i(0) = 0 for i < deg f
    int degenerate_index = -1;
    std::string degenerate_reason;
    bool squarefree = false;  // the chain ends in a nonzero constant
};

inline SturmSequence sturm_sequence(const UniPoly& f) {
    if (f.degree() < 1) throw DegreeTooSmall();
    SturmSequence s;
    s.f_degree = f.degree();
    s.polys.push_back(f);
    s.polys.push_back(f.derivative());
    for (;;) {
        const UniPoly& prev = s.polys[s.polys.size() - 2];
        const UniPoly& cur = s.polys.back();
        if (cur.is_zero()) {
            s.polys.pop_back();
            break;
        }
        UniPoly next = -UniPoly::divmod(prev, cur).second;
        if (next.is_zero()) break;
        s.polys.push_back(next);
    }
    for (const auto& P : s.polys) {
        s.constants_at_zero.push_back(P.at0());
        s.leads.push_back(P.lead());
    }
    s.squarefree = s.polys.back().degree() == 0;

    long d = s.f_degree;
    for (long i = 0; i <= d; ++i) {
        if (i >= (long)s.polys.size() || s.polys[(std::size_t)i].degree() != d - i) {
            s.degenerate = true;
            s.degenerate_index = (int)i;
            s.degenerate_reason = (i >= (long)s.polys.size()) ? "chain terminated early"
                                                              : "degree drop greater than 1";
            break;
        }
    }
    if (!s.degenerate) {
        for (long i = 0; i < d; ++i) {
            if (s.constants_at_zero[(std::size_t)i].is_zero()) {
                s.degenerate = true;
                s.degenerate_index = (int)i;
                s.degenerate_reason = "P_i(0) = 0";
                break;
            }
        }
    }
    return s;
}

// Evaluation point for sign counting: a rational, or one of the infinities.
struct SturmPoint {
    int inf = 0;  // -1, 0, +1
    Rational x;
    static SturmPoint neg_inf() { return SturmPoint{-1, Rational(0)}; }
    static SturmPoint pos_inf() { return SturmPoint{+1, Rational(0)}; }
    static SturmPoint at(const Rational& v) { return SturmPoint{0, v}; }
};

inline int poly_sign_at(const UniPoly& P, const SturmPoint& t) {
    if (P.is_zero()) return 0;
    if (t.inf == 0) return P.eval(t.x).sign();
    int s = P.lead().sign();
    if (t.inf < 0 && P.degree() % 2 != 0) s = -s;
    return s;
}

// Number of sign changes in the chain at t, zeros ignored.
inline int sign_changes(const SturmSequence& s, const SturmPoint& t) {
    int changes = 0, last = 0;
    for (const auto& P : s.polys) {
        int sg = poly_sign_at(P, t);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

inline bool point_not_below(const SturmPoint& a, const SturmPoint& b) {  // a >= b
    if (a.inf != b.inf) return a.inf > b.inf;
    return a.inf != 0 || a.x >= b.x;
}

// Exact number of real roots of squarefree f in (a, b]; empty when a >= b.
inline long count_roots(const UniPoly& f, const SturmPoint& a, const SturmPoint& b) {
    SturmSequence s = sturm_sequence(f);
    if (!s.squarefree) throw NotSquarefree();
    if (point_not_below(a, b)) return 0;
    return (long)sign_changes(s, a) - (long)sign_changes(s, b);
}

inline long count_real_roots(const UniPoly& f) {
    return count_roots(f, SturmPoint::neg_inf(), SturmPoint::pos_inf());
}

inline long count_positive_roots(const UniPoly& f) {
    return count_roots(f, SturmPoint::at(Rational(0)), SturmPoint::pos_inf());
}

inline void require_nondegenerate(const SturmSequence& s) {
    if (s.degenerate) throw DegenerateSturm(s.degenerate_index, s.degenerate_reason);
}

// Product of (-P_i(0), P_{i+1}(0)) * (c_i, -c_{i+1}) over every consecutive
// pair of the full chain (i = 0 .. deg f - 1; the last factor uses the final
// constant, which carries the discriminant's square class). Requires
// deg P_i = deg f - i for all i and no vanishing P_i(0) below i = deg f.
// Stopping one pair short is not equivalent: for a cubic the two products
// differ by (-2L, Delta)(3, -2(a^2-3b)), which is nontrivial in general,
// while the full product equals the cubic error term identically.
inline int generalized_H(const UniPoly& f, const Place& v) {
    SturmSequence s = sturm_sequence(f);
    require_nondegenerate(s);
    int h = 1;
    for (long i = 0; i + 1 <= s.f_degree; ++i) {
        const Rational& p0 = s.constants_at_zero[(std::size_t)i];
        const Rational& p1 = s.constants_at_zero[(std::size_t)i + 1];
        const Rational& c0 = s.leads[(std::size_t)i];
        const Rational& c1 = s.leads[(std::size_t)i + 1];
        h *= hilbert(-p0, p1, v) * hilbert(c0, -c1, v);
    }
    return h;
}

// Real, 2, and the odd primes visible in any chain entry that feeds the
// symbol product.
inline std::vector<Place> sturm_relevant_places(const SturmSequence& s) {
    std::set<Int> primes{Int(2)};
    auto collect = [&](const Rational& r) {
        if (r.is_zero()) return;
        for (const Int& n : {r.num(), r.den()}) {
            if (n == 1 || n == -1) continue;
            for (const auto& [p, e] : factorize(n)) primes.insert(p);
        }
    };
    for (long i = 0; i <= s.f_degree && i < (long)s.polys.size(); ++i) {
        collect(s.constants_at_zero[(std::size_t)i]);
        collect(s.leads[(std::size_t)i]);
    }
    std::vector<Place> out{Place::real()};
    for (const Int& p : primes) out.push_back(Place::padic(p));
    return out;
}

// Product of generalized_H over its support; the product formula forces +1.
inline int generalized_product_check(const UniPoly& f) {
    SturmSequence s = sturm_sequence(f);
    require_nondegenerate(s);
    int prod = 1;
    for (const Place& v : sturm_relevant_places(s)) prod *= generalized_H(f, v);
    return prod;
}

// For a cubic with b, L != 0 the chain product coincides with the local error
// term at every relevant place. Degenerate chains (in particular b = 0 or
// L = 0, which zero out P_1(0) or P_2(0)) raise DegenerateSturm.
inline bool cubic_consistency(const RationalCubic& f) {
    RationalCubic fi = integralize(f).first;
    UniPoly P = fi.poly();
    {
        SturmSequence s = sturm_sequence(P);
        require_nondegenerate(s);
    }
    for (const Place& v : relevant_places(fi)) {
        if (generalized_H(P, v) != error_term_H(fi, v)) return false;
    }
    return true;
}

}  // namespace parityq
