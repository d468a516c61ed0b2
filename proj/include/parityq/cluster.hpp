#pragma once

#include <climits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "parityq/cubic.hpp"
#include "parityq/padic.hpp"
#include "parityq/sturm.hpp"

namespace parityq {

// ---------------------------------------------------------------------------
// Real root configurations.
//
// The six cases order the real roots of x f(x):
//   1: 0 < a1 < a2 < a3      2: a1 < 0 < a2 < a3     3: a1 < a2 < 0 < a3
//   4: a1 < a2 < a3 < 0      5: a1 < 0 (one real)    6: 0 < a1 (one real)
// ---------------------------------------------------------------------------
struct RealConfiguration {
    int case_id;         // 1..6
    int real_roots;      // 1 or 3
    int positive_roots;  // 0..3
};

inline RealConfiguration real_configuration(const RationalCubic& f) {
    UniPoly P = f.poly();
    long r = count_real_roots(P);
    long pos = count_positive_roots(P);
    int case_id = (r == 3) ? (int)(4 - pos) : (pos == 0 ? 5 : 6);
    return {case_id, (int)r, (int)pos};
}

// ---------------------------------------------------------------------------
// Cluster pictures at odd primes.
// ---------------------------------------------------------------------------

// A twin is a cluster of exactly two of the roots of x f(x). The kinds track
// which factors the members come from; each stores rational unit arguments
// whose p-adic squareness determines the multiplicative-reduction signs.
enum class TwinKind {
    ZeroAndRoot,   // {0, rational root of f congruent to 0}
    ZeroQuadRoot,  // {0, root of the quadratic factor congruent to 0}
    RootPair,      // the two roots of one quadratic datum (sum, prod) collide
    SplitPair      // the linear root collides with one root of the quadratic
};

struct Twin {
    TwinKind kind;
    Rational depth;  // half-integers occur exactly for ramified quadratic pairs
    long n;          // v(a1); v(prod); v(disc); 2*v(quad(r)) respectively
    std::optional<Rational> theta_sq_E;  // absent when E has good reduction
    Rational theta_sq_Eprime;
    std::string members;
};

struct TwinSigns {
    std::optional<int> sign_E;
    int sign_Eprime = 0;
};

// Signs by squareness of the stored unit arguments; no square-root choice.
inline TwinSigns twin_signs(const Twin& t, const Int& p) {
    Place v = Place::padic(p);
    TwinSigns s;
    if (t.theta_sq_E) s.sign_E = is_square(*t.theta_sq_E, v) ? 1 : -1;
    s.sign_Eprime = is_square(t.theta_sq_Eprime, v) ? 1 : -1;
    return s;
}

struct ClusterPicture {
    Int p;
    enum class Shape { AllDistinct, OneTwin, Unsupported } shape;
    Rational top_depth;  // 0 for the supported shapes
    std::optional<Twin> twin;
    std::string reason;
    // Ordered render marks: '*' is the zero root, 'o' a root of f; the flag
    // says the mark belongs to the twin.
    std::vector<std::pair<char, bool>> marks;
};

namespace detail {

inline long val_or_inf(const Rational& x, const Int& p) {
    if (x.is_zero()) return LONG_MAX / 4;
    return valuation(x, p);
}

struct TwinEvent {
    Twin twin;
    std::set<int> indices;  // -1 = zero root, 0..2 = f roots (3,4 = quad pair)
};

inline ClusterPicture unsupported(const Int& p, const std::string& why) {
    ClusterPicture cp{p, ClusterPicture::Shape::Unsupported, Rational(0), std::nullopt, why, {}};
    return cp;
}

}  // namespace detail

// Cluster picture of x f(x) at an odd prime for an integral cubic. Exactly
// the no-coincidence and single-coincidence configurations are classified;
// everything else is an explicit Unsupported value.
inline ClusterPicture cluster_picture(const RationalCubic& f, const Int& p) {
    using detail::TwinEvent;
    if (p == 2) throw EvenPrimeUnsupported();
    if (!f.is_integral()) return detail::unsupported(p, "non-integral after scaling");

    long vd = valuation(f.delta(), p);
    long vc = valuation(f.c(), p);
    if (vd == 0 && vc == 0) {
        return ClusterPicture{p, ClusterPicture::Shape::AllDistinct, Rational(0), std::nullopt,
                              "", {{'*', false}, {'o', false}, {'o', false}, {'o', false}}};
    }
    if (p == 3) return detail::unsupported(p, "wild prime 3 beyond good reduction");

    RootData rd = root_data_of(f);
    if (rd.irreducible)
        return detail::unsupported(p, "irreducible cubic with bad reduction");

    std::vector<TwinEvent> events;
    auto add = [&](Twin t, std::set<int> idx) {
        events.push_back(TwinEvent{std::move(t), std::move(idx)});
    };

    if (rd.split()) {
        const auto& r = rd.roots;
        for (int i = 0; i < 3; ++i) {
            long v = valuation(r[(std::size_t)i], p);
            if (v > 0) {
                Rational others = -f.c() / r[(std::size_t)i];
                add(Twin{TwinKind::ZeroAndRoot, Rational(Int(v)), v, std::nullopt, others,
                         "{0, " + r[(std::size_t)i].str() + "}"},
                    {-1, i});
            }
        }
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                long v = valuation(r[(std::size_t)i] - r[(std::size_t)j], p);
                if (v <= 0) continue;
                int k = 3 - i - j;
                Rational sum = r[(std::size_t)i] + r[(std::size_t)j];
                Rational half = sum / Rational(2);
                Rational third = r[(std::size_t)k];
                add(Twin{TwinKind::RootPair, Rational(Int(v)), 2 * v, half - third,
                         half * (half - third),
                         "{" + r[(std::size_t)i].str() + ", " + r[(std::size_t)j].str() + "}"},
                    {i, j});
            }
    } else {
        const Rational& r = rd.roots[0];
        const Rational& sum = rd.quad->sum;
        const Rational& prod = rd.quad->prod;
        Rational disc = sum * sum - Rational(4) * prod;
        Rational quad_at_r = r * r - sum * r + prod;

        long vr = valuation(r, p);
        if (vr > 0)
            add(Twin{TwinKind::ZeroAndRoot, Rational(Int(vr)), vr, std::nullopt, prod,
                     "{0, " + r.str() + "}"},
                {-1, 0});

        long vpi = valuation(prod, p);
        long vsig = detail::val_or_inf(sum, p);
        if (vpi > 0) {
            if (vsig > 0) {
                // both quadratic roots congruent to 0: at least a triple
                add(Twin{TwinKind::ZeroQuadRoot, Rational(Int(vpi)), vpi, std::nullopt,
                         Rational(1), "{0, quad}"},
                    {-1, 3});
                add(Twin{TwinKind::ZeroQuadRoot, Rational(Int(vpi)), vpi, std::nullopt,
                         Rational(1), "{0, quad}"},
                    {-1, 4});
            } else {
                add(Twin{TwinKind::ZeroQuadRoot, Rational(Int(vpi)), vpi, std::nullopt, r * sum,
                         "{0, quadratic root}"},
                    {-1, 3});
            }
        }

        long vdisc = valuation(disc, p);
        if (vdisc > 0) {
            Rational half = sum / Rational(2);
            add(Twin{TwinKind::RootPair, Rational(Int(vdisc), Int(2)), vdisc, half - r,
                     half * (half - r), "{quadratic pair}"},
                {3, 4});
        }

        long vq = valuation(quad_at_r, p);
        if (vq > 0) {
            bool both = detail::val_or_inf(sum - Rational(2) * r, p) > 0 &&
                        detail::val_or_inf(prod - r * r, p) > 0;
            if (both) {
                add(Twin{TwinKind::SplitPair, Rational(Int(vq)), 2 * vq, Rational(1), Rational(1),
                         "{r, quad}"},
                    {0, 3});
                add(Twin{TwinKind::SplitPair, Rational(Int(vq)), 2 * vq, Rational(1), Rational(1),
                         "{r, quad}"},
                    {0, 4});
            } else {
                Rational tE = Rational(2) * r - sum;
                add(Twin{TwinKind::SplitPair, Rational(Int(vq)), 2 * vq, tE, r * tE,
                         "{" + r.str() + ", quadratic root}"},
                    {0, 3});
            }
        }
    }

    if (events.empty()) throw Error("internal: bad reduction without a coincidence");
    if (events.size() == 1) {
        ClusterPicture cp{p, ClusterPicture::Shape::OneTwin, Rational(0), events[0].twin, "", {}};
        if (events[0].indices.count(-1) > 0)
            cp.marks = {{'*', true}, {'o', true}, {'o', false}, {'o', false}};
        else
            cp.marks = {{'o', true}, {'o', true}, {'*', false}, {'o', false}};
        return cp;
    }
    for (std::size_t i = 0; i < events.size(); ++i)
        for (std::size_t j = i + 1; j < events.size(); ++j)
            for (int ix : events[i].indices)
                if (events[j].indices.count(ix))
                    return detail::unsupported(p, "cluster of size at least 3");
    return detail::unsupported(p, "two twin clusters");
}

// ---------------------------------------------------------------------------
// Reduction-type rows at odd primes.
// ---------------------------------------------------------------------------
enum class ReductionRow {
    Good,           // no coincidence: everything has good reduction
    OneNPlus,       // twin through 0, split side
    OneNMinus,      // twin through 0, non-split side
    InnPlusPlus,    // root pair, signs (+,+)
    InnA,           // root pair, signs (+,-)
    InnB,           // root pair, signs (-,+)
    InnMinusMinus,  // root pair, signs (-,-)
    Unsupported
};

struct ReductionType {
    ReductionRow row = ReductionRow::Unsupported;
    long n = 0;
    std::optional<int> sign_E;
    int sign_Eprime = 0;
    std::string reason;

    bool supported() const { return row != ReductionRow::Unsupported; }

    std::string str() const {
        std::string ns = std::to_string(n);
        switch (row) {
            case ReductionRow::Good: return "2";
            case ReductionRow::OneNPlus: return "1_" + ns + "^+";
            case ReductionRow::OneNMinus: return "1_" + ns + "^-";
            case ReductionRow::InnPlusPlus: return "I_{" + ns + "," + ns + "}^{+,+}";
            case ReductionRow::InnA: return "I_{" + ns + "~" + ns + "}^+(a)";
            case ReductionRow::InnB: return "I_{" + ns + "~" + ns + "}^+(b)";
            case ReductionRow::InnMinusMinus: return "I_{" + ns + "," + ns + "}^{-,-}";
            default: return "unsupported(" + reason + ")";
        }
    }
};

inline ReductionType reduction_type(const RationalCubic& f, const Int& p) {
    ClusterPicture cp = cluster_picture(f, p);
    ReductionType t;
    if (cp.shape == ClusterPicture::Shape::Unsupported) {
        t.row = ReductionRow::Unsupported;
        t.reason = cp.reason;
        return t;
    }
    if (cp.shape == ClusterPicture::Shape::AllDistinct) {
        t.row = ReductionRow::Good;
        return t;
    }
    const Twin& tw = *cp.twin;
    TwinSigns s = twin_signs(tw, p);
    t.n = tw.n;
    t.sign_E = s.sign_E;
    t.sign_Eprime = s.sign_Eprime;
    if (tw.kind == TwinKind::ZeroAndRoot || tw.kind == TwinKind::ZeroQuadRoot) {
        t.row = (s.sign_Eprime == 1) ? ReductionRow::OneNPlus : ReductionRow::OneNMinus;
    } else {
        int sE = *s.sign_E;
        if (sE == 1 && s.sign_Eprime == 1) t.row = ReductionRow::InnPlusPlus;
        else if (sE == 1) t.row = ReductionRow::InnA;
        else if (s.sign_Eprime == 1) t.row = ReductionRow::InnB;
        else t.row = ReductionRow::InnMinusMinus;
    }
    return t;
}

// Sufficient residue conditions for x f(x) to have at most one double root
// mod p. Requires p coprime to 6, integral f, and the quantities a^2-3b, b,
// a^2-4b, L, c all nonzero.
inline bool semistable_filter(const RationalCubic& f, const Int& p) {
    if (!is_prime(p) || p == 2 || p == 3) throw FilterInapplicable("p must be a prime not dividing 6");
    if (!f.is_integral()) throw FilterInapplicable("f must be integral");
    Int a = f.a().num(), b = f.b().num(), c = f.c().num();
    Int a2_3b = a * a - 3 * b;
    Int a2_4b = a * a - 4 * b;
    if (sgn(a2_3b) == 0 || sgn(b) == 0 || sgn(a2_4b) == 0 || f.L().is_zero() || sgn(c) == 0)
        throw FilterInapplicable("a^2-3b, b, a^2-4b, ab-9c, c must be nonzero");
    if (int_mod(a2_3b, p) == 0 && int_mod(9 * c - a * b, p) == 0) return false;
    if (int_mod(b * a2_4b, p) == 0 && int_mod(c, p) == 0) return false;
    return true;
}

}  // namespace parityq
