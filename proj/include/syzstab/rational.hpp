#pragma once

#include <numeric>
#include <ostream>
#include <string>

#include "syzstab/core.hpp"

namespace syzstab {

/// Exact rational with int64 numerator/denominator, always kept reduced
/// with a positive denominator. Sizes here are tiny (slopes of syzygy
/// bundles), so no arbitrary precision is needed; construction rejects
/// a zero denominator.
class Rational {
public:
    Rational() = default;
    Rational(Int num, Int den) : num_(num), den_(den) {
        if (den_ == 0) throw input_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const Int g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
    explicit Rational(Int n) : num_(n), den_(1) {}

    Int num() const { return num_; }
    Int den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    /// Canonical "p/q" form, q >= 1 (e.g. "-4/5", "0/1").
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    Int num_ = 0;
    Int den_ = 1;
};

} // namespace syzstab
