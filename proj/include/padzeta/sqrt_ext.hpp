#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace padzeta {

/// a + b*sqrt(q) in Q(sqrt(q)), q prime, so the representation is unique.
class SqrtExt {
public:
    explicit SqrtExt(std::int64_t q, Rational a = 0, Rational b = 0) : q_(q), a_(std::move(a)), b_(std::move(b)) {
        if (q < 2) throw std::invalid_argument("SqrtExt: q must be a prime >= 2");
    }

    /// sqrt(q)^e, exact for any integer e.
    static SqrtExt sqrt_q_power(std::int64_t q, std::int64_t e) {
        const std::int64_t half = (e >= 0) ? e / 2 : -((-e + 1) / 2);  // floor(e / 2)
        const Rational scale = rpow(Rational(q), half);
        return (e - 2 * half == 0) ? SqrtExt(q, scale, 0) : SqrtExt(q, 0, scale);
    }

    std::int64_t q() const noexcept { return q_; }
    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    /// a^2 - q b^2
    Rational norm() const { return a_ * a_ - b_ * b_ * q_; }
    SqrtExt conjugate() const { return SqrtExt(q_, a_, -b_); }

    SqrtExt inverse() const {
        if (is_zero()) throw std::domain_error("SqrtExt: inverse of zero");
        const Rational n = norm();
        return SqrtExt(q_, a_ / n, -b_ / n);
    }

    /// Sign of the real number a + b sqrt(q).
    int sign() const {
        const int sa = a_ > 0 ? 1 : (a_ < 0 ? -1 : 0);
        const int sb = b_ > 0 ? 1 : (b_ < 0 ? -1 : 0);
        if (sa == 0) return sb;
        if (sb == 0 || sa == sb) return sa;
        // opposite signs: compare a^2 with q b^2
        return (a_ * a_ > b_ * b_ * q_) ? sa : sb;
    }

    SqrtExt operator-() const { return SqrtExt(q_, -a_, -b_); }

    SqrtExt& operator+=(const SqrtExt& o) {
        check(o);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    SqrtExt& operator-=(const SqrtExt& o) {
        check(o);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    SqrtExt& operator*=(const SqrtExt& o) {
        check(o);
        Rational a = a_ * o.a_ + b_ * o.b_ * q_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    SqrtExt& operator/=(const SqrtExt& o) { return *this *= o.inverse(); }
    SqrtExt& operator*=(const Rational& r) {
        a_ *= r;
        b_ *= r;
        return *this;
    }

    friend SqrtExt operator+(SqrtExt l, const SqrtExt& r) { return l += r; }
    friend SqrtExt operator-(SqrtExt l, const SqrtExt& r) { return l -= r; }
    friend SqrtExt operator*(SqrtExt l, const SqrtExt& r) { return l *= r; }
    friend SqrtExt operator/(SqrtExt l, const SqrtExt& r) { return l /= r; }
    friend SqrtExt operator*(SqrtExt l, const Rational& r) { return l *= r; }
    friend SqrtExt operator*(const Rational& r, SqrtExt l) { return l *= r; }
    friend SqrtExt operator+(SqrtExt l, const Rational& r) { return l += SqrtExt(l.q_, r); }

    friend bool operator==(const SqrtExt& l, const SqrtExt& r) {
        return l.q_ == r.q_ && l.a_ == r.a_ && l.b_ == r.b_;
    }

    /// "a + b*sqrt(q)" with exact fractions, e.g. "-1/3 - 4/9*sqrt(3)".
    std::string to_string() const {
        auto frac = [](const Rational& r) {
            const auto d = boost::multiprecision::denominator(r);
            return d == 1 ? boost::multiprecision::numerator(r).str() : to_fraction_string(r);
        };
        if (b_ == 0) return frac(a_);
        std::string root = "sqrt(" + std::to_string(q_) + ")";
        std::string bpart = (abs(b_) == 1) ? root : frac(abs(b_)) + "*" + root;
        if (a_ == 0) return (b_ < 0 ? "-" : "") + bpart;
        return frac(a_) + (b_ < 0 ? " - " : " + ") + bpart;
    }

    friend std::ostream& operator<<(std::ostream& os, const SqrtExt& x) { return os << x.to_string(); }

private:
    void check(const SqrtExt& o) const {
        if (o.q_ != q_) throw std::invalid_argument("SqrtExt: mixing Q(sqrt(" + std::to_string(q_) + ")) and Q(sqrt(" +
                                                    std::to_string(o.q_) + "))");
    }

    std::int64_t q_;
    Rational a_;
    Rational b_;
};

} // namespace padzeta
