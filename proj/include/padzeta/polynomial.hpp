#pragma once

#include "rational.hpp"
#include "sqrt_ext.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace padzeta {

/// Dense univariate polynomial over Q, coefficients low degree first, no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Polynomial monomial(const Rational& c, std::size_t degree) {
        std::vector<Rational> v(degree + 1, Rational(0));
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    template <typename T>
    T evaluate(const T& x, T zero) const {
        T acc = std::move(zero);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x;
            acc = acc + *it;
        }
        return acc;
    }
    Rational operator()(const Rational& x) const { return evaluate<Rational>(x, Rational(0)); }
    SqrtExt operator()(const SqrtExt& x) const { return evaluate<SqrtExt>(x, SqrtExt(x.q())); }

    friend Polynomial operator+(const Polynomial& l, const Polynomial& r) {
        std::vector<Rational> v(std::max(l.c_.size(), r.c_.size()), Rational(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = l.coeff(i) + r.coeff(i);
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& l, const Polynomial& r) { return l + r * Rational(-1); }
    friend Polynomial operator*(const Polynomial& l, const Polynomial& r) {
        if (l.is_zero() || r.is_zero()) return {};
        std::vector<Rational> v(l.c_.size() + r.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < l.c_.size(); ++i)
            for (std::size_t j = 0; j < r.c_.size(); ++j) v[i + j] += l.c_[i] * r.c_[j];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& l, const Rational& s) {
        std::vector<Rational> v = l.c_;
        for (auto& x : v) x *= s;
        return Polynomial(std::move(v));
    }

    /// Euclidean division: returns (quotient, remainder).
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
        if (den.is_zero()) throw std::domain_error("polynomial division by zero");
        Polynomial rem = num;
        std::vector<Rational> quot(num.c_.size() >= den.c_.size() ? num.c_.size() - den.c_.size() + 1 : 0,
                                   Rational(0));
        while (!rem.is_zero() && rem.degree() >= den.degree()) {
            const auto shift = static_cast<std::size_t>(rem.degree() - den.degree());
            const Rational factor = rem.leading() / den.leading();
            quot[shift] = factor;
            rem = rem - monomial(factor, shift) * den;
        }
        return {Polynomial(std::move(quot)), rem};
    }

    Polynomial monic() const { return is_zero() ? *this : *this * (Rational(1) / leading()); }

    friend Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const Rational mag = abs(c_[i]);
            std::string term;
            const bool unit = (mag == 1 && i > 0);
            if (!unit) {
                term = boost::multiprecision::denominator(mag) == 1 ? boost::multiprecision::numerator(mag).str()
                                                                     : to_fraction_string(mag);
                if (i > 0) term += "*";
            }
            if (i == 1) term += var;
            if (i > 1) term += var + "^" + std::to_string(i);
            if (out.empty())
                out = (c_[i] < 0 ? "-" : "") + term;
            else
                out += (c_[i] < 0 ? " - " : " + ") + term;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

} // namespace padzeta
