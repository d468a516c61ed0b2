#pragma once

#include <set>
#include <vector>

#include "parityq/cubic.hpp"
#include "parityq/place.hpp"
#include "parityq/primes.hpp"

namespace parityq {

// Places where any local quantity of f can be nontrivial: the real place, 2,
// and every odd prime dividing one of b, c, L, Delta (zero members skipped).
// Outside this set every Hilbert entry is a unit pair at an odd prime and the
// reduction is good, so all local factors are +1. Requires integral f.
inline std::vector<Place> relevant_places(const RationalCubic& f) {
    if (!f.is_integral()) throw NotIntegral();
    std::set<Int> primes;
    for (const Rational* x : {&f.b(), &f.c(), &f.L(), &f.delta()}) {
        if (x->is_zero()) continue;
        Int n = x->num();
        if (n == 1 || n == -1) continue;
        for (const auto& [p, e] : factorize(n)) primes.insert(p);
    }
    primes.insert(2);
    std::vector<Place> out{Place::real()};
    for (const Int& p : primes) out.push_back(Place::padic(p));
    return out;
}

}  // namespace parityq
