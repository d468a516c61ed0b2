#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parityq/rational.hpp"

namespace parityq {

// Univariate polynomial over Q, coefficients lowest degree first, no trailing
// zero coefficient (the zero polynomial has an empty coefficient list).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& r) { return UniPoly({r}); }
    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
    // Monic from the trailing coefficients, highest first: {a,b,c} -> x^3+ax^2+bx+c.
    static UniPoly monic_from_desc(const std::vector<Rational>& rest) {
        std::vector<Rational> c;
        c.reserve(rest.size() + 1);
        for (auto it = rest.rbegin(); it != rest.rend(); ++it) c.push_back(*it);
        c.push_back(Rational(1));
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return (long)c_.size() - 1; }  // -1 for the zero polynomial

    const Rational& coeff(long k) const {
        static const Rational kZero(0);
        if (k < 0 || k >= (long)c_.size()) return kZero;
        return c_[(std::size_t)k];
    }
    Rational lead() const { return is_zero() ? Rational(0) : c_.back(); }
    Rational at0() const { return coeff(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(Int((long)k)) * c_[k];
        return UniPoly(std::move(d));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff((long)i) + b.coeff((long)i);
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    UniPoly operator-() const {
        std::vector<Rational> c(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& a) {
        std::vector<Rational> c(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = s * a.c_[i];
        return UniPoly(std::move(c));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Exact division with remainder: num = q*den + r, deg r < deg den.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den) {
        if (den.is_zero()) throw DivisionByZeroPoly();
        UniPoly q = zero();
        UniPoly r = num;
        Rational dl = den.lead();
        long dd = den.degree();
        while (!r.is_zero() && r.degree() >= dd) {
            long k = r.degree() - dd;
            Rational cf = r.lead() / dl;
            std::vector<Rational> mono((std::size_t)k + 1, Rational(0));
            mono[(std::size_t)k] = cf;
            UniPoly m(std::move(mono));
            q = q + m;
            r = r - m * den;
        }
        return {q, r};
    }

    // p(s*x + t)
    UniPoly compose_linear(const Rational& s, const Rational& t) const {
        UniPoly lin({t, s});
        UniPoly acc = zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
        return acc;
    }

    // p(x^2)
    UniPoly subst_x_squared() const {
        if (is_zero()) return zero();
        std::vector<Rational> c(2 * c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[2 * i] = c_[i];
        return UniPoly(std::move(c));
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (long k = degree(); k >= 0; --k) {
            const Rational& a = coeff(k);
            if (a.is_zero()) continue;
            bool first = out.empty();
            Rational mag = a.abs();
            if (!first) out += (a.sign() < 0) ? " - " : " + ";
            else if (a.sign() < 0) out += "-";
            bool unit_coeff = (mag == Rational(1)) && k > 0;
            if (!unit_coeff) out += mag.str();
            if (k > 0) {
                if (!unit_coeff) out += "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace parityq
