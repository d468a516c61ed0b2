#pragma once

#include <string>

#include "parityq/primes.hpp"
#include "parityq/rational.hpp"

namespace parityq {

// A completion of Q: the real place, a p-adic place, or the complex field
// (the latter for base-change checks; Q itself has no complex place).
class Place {
public:
    enum class Kind { Real, Complex, Padic };

    static Place real() { return Place(Kind::Real, 0); }
    static Place complex() { return Place(Kind::Complex, 0); }
    static Place padic(const Int& p) {
        if (!is_prime(p)) throw Error("padic place requires a prime, got " + p.get_str());
        return Place(Kind::Padic, p);
    }

    Kind kind() const { return kind_; }
    bool is_real() const { return kind_ == Kind::Real; }
    bool is_complex() const { return kind_ == Kind::Complex; }
    bool is_padic() const { return kind_ == Kind::Padic; }
    const Int& p() const { return p_; }

    std::string str() const {
        switch (kind_) {
            case Kind::Real: return "real";
            case Kind::Complex: return "complex";
            default: return p_.get_str();
        }
    }

    friend bool operator==(const Place& a, const Place& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Padic || a.p_ == b.p_);
    }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
    friend bool operator<(const Place& a, const Place& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
        if (a.kind_ != Kind::Padic) return false;
        return a.p_ < b.p_;
    }

private:
    Place(Kind k, const Int& p) : kind_(k), p_(p) {}
    Kind kind_;
    Int p_;
};

inline std::ostream& operator<<(std::ostream& os, const Place& v) { return os << v.str(); }

}  // namespace parityq
