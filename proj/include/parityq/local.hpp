#pragma once

#include <optional>
#include <string>
#include <utility>

#include "parityq/cluster.hpp"
#include "parityq/curves.hpp"
#include "parityq/error_term.hpp"

namespace parityq {

// ---------------------------------------------------------------------------
// Local term at the real place.
// ---------------------------------------------------------------------------
struct RealLocalData {
    int case_id;
    int n_E, n_JacEprime, n_JacC;
    int kernel_identity;
    int mu;
};

inline int log2_exact(long ratio) {
    if (ratio <= 0 || (ratio & (ratio - 1)) != 0)
        throw Error("internal: component ratio is not a power of 2");
    int k = 0;
    while ((1L << k) < ratio) ++k;
    return k;
}

inline std::pair<int, RealLocalData> lambda_real(const RationalCubic& f) {
    RealConfiguration rc = real_configuration(f);
    RealLocalData d;
    d.case_id = rc.case_id;
    d.n_E = d.n_JacEprime = (rc.real_roots == 3) ? 2 : 1;
    int n_C = rc.positive_roots > 0 ? rc.positive_roots : 1;
    d.n_JacC = 1 << (n_C - 1);
    // Kernel points on the identity component: 2 exactly when -a1 a2 is the
    // largest real member of {-a_i a_j}, i.e. in cases 1, 5 and 6.
    d.kernel_identity = (rc.case_id == 1 || rc.case_id >= 5) ? 2 : 1;
    d.mu = 1;  // C(R) is never empty for a monic even-degree model
    long num = (long)d.kernel_identity * d.n_E * d.n_JacEprime;
    if (num % d.n_JacC != 0) throw Error("internal: component ratio not integral");
    int lambda = d.mu * (log2_exact(num / d.n_JacC) % 2 == 0 ? 1 : -1);
    return {lambda, d};
}

// ---------------------------------------------------------------------------
// Local term at odd p, from the reduction-type row.
// ---------------------------------------------------------------------------
struct PadicLocalData {
    ReductionType type;
    long c_E, c_JacEprime, c_JacC;
    int mu;
};

namespace detail {

inline std::pair<int, PadicLocalData> lambda_from_type(const ReductionType& t) {
    if (!t.supported()) throw UnsupportedPlace(t.reason);
    long n = t.n;
    long ntil = (n % 2 == 0) ? 2 : 1;
    PadicLocalData d{t, 1, 1, 1, 1};
    int lambda_table = 1;
    switch (t.row) {
        case ReductionRow::Good:
            break;
        case ReductionRow::OneNPlus:
            d.c_E = 1; d.c_JacEprime = 2 * n; d.c_JacC = n;
            lambda_table = -1;
            break;
        case ReductionRow::OneNMinus:
            d.c_E = 1; d.c_JacEprime = 2; d.c_JacC = ntil;
            lambda_table = (n % 2 == 0) ? 1 : -1;
            break;
        case ReductionRow::InnPlusPlus:
            d.c_E = n; d.c_JacEprime = n; d.c_JacC = n * n;
            lambda_table = 1;
            break;
        case ReductionRow::InnA:
            d.c_E = n; d.c_JacEprime = ntil; d.c_JacC = n;
            lambda_table = (n % 2 == 0) ? -1 : 1;
            break;
        case ReductionRow::InnB:
            d.c_E = ntil; d.c_JacEprime = n; d.c_JacC = n;
            lambda_table = (n % 2 == 0) ? -1 : 1;
            break;
        case ReductionRow::InnMinusMinus:
            d.c_E = ntil; d.c_JacEprime = ntil; d.c_JacC = ntil * ntil;
            lambda_table = 1;
            break;
        default:
            throw UnsupportedPlace(t.reason);
    }
    long num = d.c_E * d.c_JacEprime;
    if (num % d.c_JacC != 0) throw Error("internal: Tamagawa ratio not integral");
    int lambda = d.mu * (log2_exact(num / d.c_JacC) % 2 == 0 ? 1 : -1);
    if (lambda != lambda_table)
        throw Error("internal: Tamagawa-ratio lambda disagrees with the table row");
    return {lambda, d};
}

inline std::pair<int, int> root_numbers_from_type(const ReductionType& t) {
    if (!t.supported()) throw UnsupportedPlace(t.reason);
    // Split multiplicative reduction (a twin of sign +) forces w = -1; the
    // twin lies on the E side for the I rows and on the E' side otherwise.
    int wE = (t.row == ReductionRow::InnPlusPlus || t.row == ReductionRow::InnA) ? -1 : 1;
    int wJ = (t.row == ReductionRow::OneNPlus || t.row == ReductionRow::InnPlusPlus ||
              t.row == ReductionRow::InnB)
                 ? -1
                 : 1;
    return {wE, wJ};
}

}  // namespace detail

inline std::pair<int, PadicLocalData> lambda_padic(const RationalCubic& f, const Int& p) {
    return detail::lambda_from_type(reduction_type(integralize(f).first, p));
}

// (w_E, w_JacE') at an archimedean place or an odd place with supported type.
inline std::pair<int, int> root_numbers(const RationalCubic& f, const Place& v) {
    if (v.is_real() || v.is_complex()) return {-1, -1};
    if (v.p() == 2) throw UnsupportedPlace("no root-number rule at the prime 2");
    return detail::root_numbers_from_type(reduction_type(integralize(f).first, v.p()));
}

// ---------------------------------------------------------------------------
// Per-place report.
// ---------------------------------------------------------------------------
struct LocalParityReport {
    Place place = Place::real();
    bool supported = false;
    std::string reason;  // set when !supported
    int H = 1;           // defined at every place
    std::optional<int> w_E, w_JacEprime, lambda;
    std::optional<bool> identity_holds;  // w_E * w_JacE' == lambda * H
    std::optional<RealLocalData> real_data;
    std::optional<PadicLocalData> padic_data;

    int ww() const { return *w_E * *w_JacEprime; }
};

inline LocalParityReport local_report(const RationalCubic& f, const Place& v) {
    LocalParityReport r;
    r.place = v;
    r.H = error_term_H(f, v);
    auto finish = [&](int lambda, int wE, int wJ) {
        r.supported = true;
        r.lambda = lambda;
        r.w_E = wE;
        r.w_JacEprime = wJ;
        r.identity_holds = (wE * wJ == lambda * r.H);
    };
    switch (v.kind()) {
        case Place::Kind::Complex:
            finish(1, -1, -1);
            return r;
        case Place::Kind::Real: {
            auto [lambda, data] = lambda_real(f);
            r.real_data = data;
            finish(lambda, -1, -1);
            return r;
        }
        case Place::Kind::Padic:
            break;
    }
    if (v.p() == 2) {
        r.reason = "no local rule for lambda or root numbers at the prime 2";
        return r;
    }
    RationalCubic fi = integralize(f).first;
    ReductionType t = reduction_type(fi, v.p());
    if (!t.supported()) {
        r.reason = t.reason;
        return r;
    }
    auto [lambda, data] = detail::lambda_from_type(t);
    auto [wE, wJ] = detail::root_numbers_from_type(t);
    r.padic_data = data;
    finish(lambda, wE, wJ);
    return r;
}

// Lambda read off the local identity: w_E * w_JacE' * H. Always flagged as
// inferred; the product of root numbers is taken from the caller when the
// place has no direct rule.
struct InferredLambda {
    int value;
    bool inferred;
};

inline InferredLambda infer_lambda(const RationalCubic& f, const Place& v,
                                   std::optional<int> ww = std::nullopt) {
    int H = error_term_H(f, v);
    int w;
    if (ww) {
        w = *ww;
    } else if (v.is_real() || v.is_complex()) {
        w = 1;
    } else if (v.p() != 2) {
        ReductionType t = reduction_type(integralize(f).first, v.p());
        if (!t.supported()) throw CannotInfer("unsupported reduction type and no w product given");
        auto [wE, wJ] = detail::root_numbers_from_type(t);
        w = wE * wJ;
    } else {
        throw CannotInfer("root numbers at the prime 2 are not computable here");
    }
    return {w * H, true};
}

}  // namespace parityq
