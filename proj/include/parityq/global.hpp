#pragma once

#include <string>
#include <vector>

#include "parityq/local.hpp"
#include "parityq/support.hpp"

namespace parityq {

// Product of the local error term over the relevant places (every other place
// contributes +1). The Hilbert product formula forces the value +1.
inline std::pair<int, std::vector<std::pair<Place, int>>> global_product_H(
    const RationalCubic& f) {
    RationalCubic fi = integralize(f).first;
    std::vector<std::pair<Place, int>> entries;
    int prod = 1;
    for (const Place& v : relevant_places(fi)) {
        int h = error_term_H(fi, v);
        entries.push_back({v, h});
        prod *= h;
    }
    return {prod, entries};
}

enum class GlobalMode { Strict, Inferred };

struct GlobalReport {
    GlobalMode mode = GlobalMode::Inferred;
    std::vector<LocalParityReport> reports;   // one per relevant place
    std::vector<Place> places;
    int product_H = 1;
    int product_lambda = 1;
    int product_w = 1;
    bool any_inferred = false;
    std::vector<Place> inferred_places;
    bool all_identities = false;  // per-place identities and the global product
};

// Assembles per-place reports over the relevant places and checks
// prod(lambda) = prod(w_E w_JacE'). Strict mode requires every relevant place
// to carry directly computed data; with the prime 2 always relevant and never
// directly computable, strict mode reports the offending places instead. In
// inferred mode unsupported places take w = +1 and lambda = H, flagged, which
// reduces the global assertion to the product formula plus the supported
// local identities.
inline GlobalReport global_identity(const RationalCubic& f, GlobalMode mode) {
    RationalCubic fi = integralize(f).first;
    GlobalReport g;
    g.mode = mode;
    g.places = relevant_places(fi);
    for (const Place& v : g.places) g.reports.push_back(local_report(fi, v));

    if (mode == GlobalMode::Strict) {
        std::vector<std::string> bad;
        for (const auto& r : g.reports)
            if (!r.supported) bad.push_back(r.place.str());
        if (!bad.empty()) {
            std::string msg = "strict mode unsupported at places:";
            for (const auto& s : bad) msg += " " + s;
            throw StrictModeUnsupported(bad, msg);
        }
    }

    bool ok = true;
    for (auto& r : g.reports) {
        g.product_H *= r.H;
        if (r.supported) {
            g.product_lambda *= *r.lambda;
            g.product_w *= r.ww();
            ok = ok && *r.identity_holds;
        } else {
            // inferred entries: w := +1, lambda := H via the local identity
            r.w_E = 1;
            r.w_JacEprime = 1;
            r.lambda = r.H;
            g.product_lambda *= r.H;
            g.any_inferred = true;
            g.inferred_places.push_back(r.place);
        }
    }
    ok = ok && (g.product_lambda == g.product_w) && (g.product_H == 1);
    g.all_identities = ok;
    return g;
}

}  // namespace parityq
