#pragma once

// Arithmetic predicates over Q_p for odd p: valuations, Legendre symbols,
// Hilbert symbols and the norm-group test for F(sqrt(theta))/F.

#include "errors.hpp"
#include "rational.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace padzeta {

namespace detail {

constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
constexpr bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

constexpr std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace detail

/// An odd prime p; doubles as the residue-field size q of Q_p.
class Prime {
public:
    explicit Prime(std::int64_t p) : p_(p) {
        if (p == 2) throw InvalidPrime("p = 2 is not supported: residual characteristic must be odd");
        if (p < 3 || !detail::is_prime_u64(static_cast<std::uint64_t>(p)))
            throw InvalidPrime("p = " + std::to_string(p) + " is not an odd prime");
    }

    std::int64_t value() const noexcept { return p_; }
    operator std::int64_t() const noexcept { return p_; }

    friend bool operator==(const Prime&, const Prime&) = default;

private:
    std::int64_t p_;
};

/// v_p(x) for nonzero rational x.
inline int valuation(const Rational& x, const Prime& p) {
    if (x == 0) throw ZeroInput("valuation of 0 is +infinity");
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    const BigInt bp(p.value());
    int v = 0;
    while (num % bp == 0) {
        num /= bp;
        ++v;
    }
    while (den % bp == 0) {
        den /= bp;
        --v;
    }
    return v;
}

/// Legendre symbol (a/p) in {-1, 0, +1} via Euler's criterion.
inline int legendre(std::int64_t a, const Prime& p) {
    const std::int64_t r = detail::mod_floor(a, p.value());
    if (r == 0) return 0;
    const auto e = detail::powmod(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>((p.value() - 1) / 2),
                                  static_cast<std::uint64_t>(p.value()));
    return e == 1 ? 1 : -1;
}

/// unit * p^val with val in {0, 1} and p not dividing unit.
///
/// The unit is kept exactly as given (e.g. -1 stays -1, not p-1) so congruence
/// counting at level p^k sees the actual p-adic integer; classification only
/// looks at residue().
class Coefficient {
public:
    Coefficient(const Prime& p, int val, std::int64_t unit) : p_(p), val_(val), unit_(unit) {
        if (val != 0 && val != 1)
            throw InvalidCoefficient("coefficient valuation must be 0 or 1, got " + std::to_string(val));
        if (detail::mod_floor(unit, p.value()) == 0)
            throw InvalidCoefficient("coefficient unit part " + std::to_string(unit) + " is divisible by p = " +
                                     std::to_string(p.value()));
    }

    const Prime& prime() const noexcept { return p_; }
    int val() const noexcept { return val_; }
    std::int64_t unit() const noexcept { return unit_; }
    /// Unit part reduced into [1, p-1].
    std::int64_t residue() const noexcept { return detail::mod_floor(unit_, p_.value()); }

    Rational value() const { return Rational(unit_) * (val_ == 1 ? Rational(p_.value()) : Rational(1)); }
    Coefficient negated() const { return Coefficient(p_, val_, -unit_); }

    /// True iff this is a square in Q_p^x (even valuation and square unit residue).
    bool is_square() const { return val_ == 0 && legendre(unit_, p_) == 1; }

    friend bool operator==(const Coefficient& a, const Coefficient& b) {
        return a.p_ == b.p_ && a.val_ == b.val_ && a.unit_ == b.unit_;
    }

private:
    Prime p_;
    int val_;
    std::int64_t unit_;
};

/// Hilbert symbol (a, b)_p for odd p, by the closed formula
/// (-1)^{alpha beta eps(p)} (u1/p)^beta (u2/p)^alpha.
inline int hilbert_symbol(const Coefficient& a, const Coefficient& b, const Prime& p) {
    const int alpha = a.val();
    const int beta = b.val();
    const int eps = static_cast<int>(((p.value() - 1) / 2) % 2);
    int result = ((alpha * beta * eps) % 2 == 0) ? 1 : -1;
    if (beta % 2 == 1) result *= legendre(a.unit(), p);
    if (alpha % 2 == 1) result *= legendre(b.unit(), p);
    return result;
}

/// Whether b is a norm from F(sqrt(a)) (a non-square): exactly hilbert_symbol(a, b) == 1.
inline bool is_norm(const Coefficient& a, const Coefficient& b, const Prime& p) {
    return hilbert_symbol(a, b, p) == 1;
}

/// Smallest n in [1, p-1] with (n/p) = -1.
inline std::int64_t smallest_nonresidue(const Prime& p) {
    for (std::int64_t n = 2; n < p.value(); ++n)
        if (legendre(n, p) == -1) return n;
    throw InvalidPrime("no quadratic non-residue found");  // unreachable for odd p
}

} // namespace padzeta
