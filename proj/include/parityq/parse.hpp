#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "parityq/cubic.hpp"
#include "parityq/place.hpp"
#include "parityq/poly.hpp"

namespace parityq {

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    void skip_ws() {
        while (!done() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++i;
        return true;
    }
    void expect(char c, const std::string& what) {
        if (!eat(c)) throw ParseError("expected '" + std::string(1, c) + "' " + what, i);
    }

    Rational rational() {
        skip_ws();
        std::size_t start = i;
        if (peek() == '+' || peek() == '-') ++i;
        std::size_t digits0 = i;
        while (!done() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == digits0) throw ParseError("expected a number", start);
        std::string num = s.substr(start, i - start);
        if (peek() == '/') {
            ++i;
            std::size_t dstart = i;
            while (!done() && std::isdigit((unsigned char)s[i])) ++i;
            if (i == dstart) throw ParseError("expected a denominator", dstart);
            return Rational(Int(num), Int(s.substr(dstart, i - dstart)));
        }
        return Rational(Int(num));
    }
};

// One parenthesized factor: (x - r), (x + r), or (x^2 +- u x +- w).
struct Factor {
    bool quadratic = false;
    Rational root;       // linear: the root
    Rational sum, prod;  // quadratic: x^2 - sum x + prod
};

inline Factor parse_factor(Cursor& c) {
    c.expect('(', "to open a factor");
    c.skip_ws();
    if (c.peek() != 'x') throw ParseError("factor must start with x", c.i);
    ++c.i;
    Factor f;
    if (c.peek() == '^') {
        ++c.i;
        if (c.peek() != '2') throw ParseError("only x^2 factors are supported", c.i);
        ++c.i;
        f.quadratic = true;
        Rational u(0), w(0);
        c.skip_ws();
        // optional middle term: +- u x  (coefficient may be omitted)
        std::size_t save = c.i;
        if (c.peek() == '+' || c.peek() == '-') {
            int sign = (c.peek() == '-') ? -1 : 1;
            ++c.i;
            c.skip_ws();
            Rational mag(1);
            bool had_number = std::isdigit((unsigned char)c.peek());
            if (had_number) mag = c.rational();
            c.skip_ws();
            if (c.peek() == '*') { ++c.i; c.skip_ws(); }
            if (c.peek() == 'x') {
                ++c.i;
                u = Rational(sign) * mag;
            } else if (had_number) {
                w = Rational(sign) * mag;  // that was the constant term
                f.sum = -u;
                f.prod = w;
                c.expect(')', "to close the factor");
                return f;
            } else {
                throw ParseError("expected x or a constant", save);
            }
        }
        c.skip_ws();
        if (c.peek() == '+' || c.peek() == '-') {
            int sign = (c.peek() == '-') ? -1 : 1;
            ++c.i;
            w = Rational(sign) * c.rational();
        }
        f.sum = -u;  // x^2 + u x + w  ==  x^2 - (-u) x + w
        f.prod = w;
        c.expect(')', "to close the factor");
        return f;
    }
    c.skip_ws();
    if (c.peek() != '+' && c.peek() != '-')
        throw ParseError("expected '+' or '-' after x in a linear factor", c.i);
    int sign = (c.peek() == '-') ? 1 : -1;  // (x - r): root r; (x + r): root -r
    ++c.i;
    f.root = Rational(sign) * c.rational();
    c.expect(')', "to close the factor");
    return f;
}

}  // namespace detail

// Cubic literal: coefficient form "a,b,c" for x^3+ax^2+bx+c, or factored form
// "(x-r1)(x-r2)(x-r3)" / "(x-r)(x^2+ux+w)" with rational literals.
inline RationalCubic parse_cubic(const std::string& text) {
    detail::Cursor c{text};
    c.skip_ws();
    if (c.peek() == '(') {
        std::vector<detail::Factor> fs;
        while (true) {
            c.skip_ws();
            if (c.peek() != '(') break;
            fs.push_back(detail::parse_factor(c));
        }
        c.skip_ws();
        if (!c.done()) throw ParseError("trailing input after factors", c.i);
        std::vector<Rational> roots;
        std::vector<detail::Factor> quads;
        for (const auto& f : fs) {
            if (f.quadratic)
                quads.push_back(f);
            else
                roots.push_back(f.root);
        }
        if (roots.size() == 3 && quads.empty())
            return RationalCubic::from_roots(roots[0], roots[1], roots[2]);
        if (roots.size() == 1 && quads.size() == 1)
            return RationalCubic::from_linear_quadratic(roots[0], quads[0].sum, quads[0].prod);
        throw ParseError("a cubic needs three linear factors or one linear and one quadratic",
                         c.i);
    }
    // coefficient form
    Rational a = c.rational();
    c.expect(',', "between coefficients");
    Rational b = c.rational();
    c.expect(',', "between coefficients");
    Rational cc = c.rational();
    c.skip_ws();
    if (!c.done()) throw ParseError("trailing input after coefficients", c.i);
    return RationalCubic(a, b, cc);
}

// Polynomial literal: factored form (any number of factors), or a monic
// coefficient list "a,b,...,k" meaning x^n + a x^{n-1} + ... + k.
inline UniPoly parse_poly(const std::string& text) {
    detail::Cursor c{text};
    c.skip_ws();
    if (c.peek() == '(') {
        UniPoly p = UniPoly::constant(Rational(1));
        while (true) {
            c.skip_ws();
            if (c.peek() != '(') break;
            detail::Factor f = detail::parse_factor(c);
            if (f.quadratic)
                p = p * UniPoly({f.prod, -f.sum, Rational(1)});
            else
                p = p * UniPoly({-f.root, Rational(1)});
        }
        c.skip_ws();
        if (!c.done()) throw ParseError("trailing input after factors", c.i);
        return p;
    }
    std::vector<Rational> rest;
    rest.push_back(c.rational());
    while (true) {
        c.skip_ws();
        if (c.done()) break;
        c.expect(',', "between coefficients");
        rest.push_back(c.rational());
    }
    return UniPoly::monic_from_desc(rest);
}

// Roots of a fully split factored literal, in the order written (the cubic
// parser sorts them; matchings pair by position, so order matters there).
inline std::vector<Rational> parse_ordered_roots(const std::string& text) {
    detail::Cursor c{text};
    c.skip_ws();
    if (c.peek() != '(') throw ParseError("factored form with linear factors required", c.i);
    std::vector<Rational> roots;
    while (true) {
        c.skip_ws();
        if (c.peek() != '(') break;
        detail::Factor f = detail::parse_factor(c);
        if (f.quadratic) throw ParseError("only linear factors allowed here", c.i);
        roots.push_back(f.root);
    }
    c.skip_ws();
    if (!c.done()) throw ParseError("trailing input after factors", c.i);
    return roots;
}

// "real", "complex", or a prime.
inline Place parse_place(const std::string& text) {
    if (text == "real" || text == "oo" || text == "inf") return Place::real();
    if (text == "complex") return Place::complex();
    try {
        Int p(text);
        return Place::padic(p);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad place '" + text + "'", 0);
    }
}

}  // namespace parityq
