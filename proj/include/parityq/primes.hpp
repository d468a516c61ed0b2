#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "parityq/rational.hpp"

namespace parityq {

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace detail {

inline const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 100000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<unsigned long> ps;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            ps.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i) sieve[j] = false;
        }
        return ps;
    }();
    return primes;
}

// Pollard rho (Brent variant). n odd composite, no factor below the trial bound.
inline Int pollard_rho(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int count = 0;
        while (d == 1) {
            x = int_mod(x * x + c, n);
            y = int_mod(y * y + c, n);
            y = int_mod(y * y + c, n);
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle, retry with another c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            if (++count > 100000000) break;
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_into(Int n, std::map<Int, long>& out) {
    if (n <= 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

// Prime factorization of |n|, sorted by prime. n must be nonzero.
inline std::map<Int, long> factorize(const Int& n_in) {
    if (sgn(n_in) == 0) throw ZeroArgument("factorize");
    Int n = ::abs(n_in);
    std::map<Int, long> out;
    for (unsigned long p : detail::small_primes()) {
        if (n == 1) break;
        if (Int(p) * Int(p) > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Int(p)];
            n /= p;
        }
    }
    if (n > 1) detail::factor_into(n, out);
    return out;
}

// All positive divisors of |n| not exceeding `bound` (0 = no bound), ascending.
inline std::vector<Int> divisors_up_to(const Int& n, const Int& bound) {
    auto fac = factorize(n);
    std::vector<Int> divs{1};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                Int d = divs[i] * pk;
                if (sgn(bound) == 0 || d <= bound) divs.push_back(d);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

}  // namespace parityq
