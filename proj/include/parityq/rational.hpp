#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "parityq/errors.hpp"

namespace parityq {

using Int = mpz_class;

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Nonnegative remainder.
inline Int int_mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int int_sqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_((signed long)n) {}
    Rational(const Int& n) : q_(n) {}
    template <class U>
    Rational(const __gmp_expr<mpz_t, U>& e) : q_(Int(e)) {}
    Rational(const Int& num, const Int& den) {
        if (sgn(den) == 0) throw ZeroArgument("rational denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "n" or "n/d" with optional sign.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Int(s));
            return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational literal '" + s + "'", 0);
        }
    }

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }
    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    // Square in Q. Zero counts as a square.
    bool is_rational_square() const {
        if (sign() < 0) return false;
        return is_perfect_square(num()) && is_perfect_square(den());
    }

    Rational reciprocal() const {
        if (is_zero()) throw ZeroArgument("reciprocal");
        return Rational(den(), num());
    }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (e < 0) return reciprocal().pow(-e);
        return Rational(int_pow(num(), (unsigned long)e), int_pow(den(), (unsigned long)e));
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw ZeroArgument("rational division");
        return wrap(a.q_ / b.q_);
    }
    Rational operator-() const { return wrap(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    // "n" when the denominator is 1, "n/d" otherwise.
    std::string str() const {
        if (is_integer()) return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational wrap(const mpq_class& q) {
        Rational r;
        r.q_ = q;  // results of mpq arithmetic are already canonical
        return r;
    }
    mpq_class q_;
};

inline Rational operator*(const Int& n, const Rational& r) { return Rational(n) * r; }
inline Rational operator*(long n, const Rational& r) { return Rational(n) * r; }

}  // namespace parityq
