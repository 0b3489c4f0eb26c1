#pragma once

// I_s(u, theta) = sum_n q^{-ns} Vol(V_n^0) as a rational function of t = q^{-s},
// exact evaluation at half-integral s in Q(sqrt(q)), and the value at s = -3/2.
//
// The integrand exponent here is s itself. Where the integral is written with
// |Q|^{3(s'-1)/2} instead, s = 3(s'-1)/2, so s' = 0 corresponds to s = -3/2.

#include "errors.hpp"
#include "padic.hpp"
#include "polynomial.hpp"
#include "quadform.hpp"
#include "rational.hpp"
#include "sqrt_ext.hpp"
#include "volumes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace padzeta {

/// Least start index n0 and exact (A, rho) with entry(n) = A rho^n for every
/// given n >= n0. The tail segment must hold at least three entries.
inline GeometricTail detect_tail(const std::vector<VolumeEntry>& entries) {
    constexpr std::size_t kMinSegment = 3;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].n != static_cast<int>(i)) throw InsufficientEntries("entries must be indexed 0, 1, 2, ...");

    for (std::size_t n0 = 0; n0 + kMinSegment <= entries.size(); ++n0) {
        const Rational& first = entries[n0].vol;
        GeometricTail tail;
        tail.start = static_cast<int>(n0);
        if (first == 0) {
            tail.amplitude = 0;
            tail.ratio = 0;
        } else {
            tail.ratio = entries[n0 + 1].vol / first;
            if (tail.ratio < 0 || tail.ratio >= 1) continue;
            if (tail.ratio == 0 && n0 > 0) continue;  // A rho^{n0} = 0 cannot reproduce a nonzero entry
            tail.amplitude = first / rpow(tail.ratio, static_cast<std::int64_t>(n0));
        }
        bool ok = true;
        for (std::size_t n = n0; n < entries.size() && ok; ++n) ok = (entries[n].vol == tail.at(static_cast<int>(n)));
        if (ok) return tail;
    }
    throw NoGeometricTail("no eventually geometric tail with at least 3 matching entries among " +
                          std::to_string(entries.size()) + " entries");
}

/// num(t) / den(t) in lowest terms, den monic.
struct LocalZeta {
    std::int64_t q;
    Polynomial num;
    Polynomial den;
    /// The defining series converges for |t| < radius; nullopt means everywhere.
    std::optional<Rational> radius;

    std::string to_string() const {
        if (den.degree() == 0) return num.to_string();
        return "(" + num.to_string() + ") / (" + den.to_string() + ")";
    }
};

/// Sums sum_{n < n0} vol(n) t^n + A (rho t)^{n0} / (1 - rho t) into one reduced fraction.
inline LocalZeta closed_form_zeta(const VolumeTable& table) {
    if (!table.tail()) throw NoGeometricTail("closed_form_zeta needs a table with a tail model");
    const GeometricTail& tail = *table.tail();

    std::vector<Rational> head;
    for (int n = 0; n < tail.start; ++n) head.push_back(table.vol(n));
    const Polynomial prefix(head);
    const Polynomial den{Rational(1), -tail.ratio};
    const Polynomial tail_num =
        Polynomial::monomial(tail.amplitude * rpow(tail.ratio, tail.start), static_cast<std::size_t>(tail.start));

    Polynomial num = prefix * den + tail_num;
    Polynomial d = den;
    const Polynomial g = gcd(num, d);
    if (g.degree() > 0) {
        num = divmod(num, g).first;
        d = divmod(d, g).first;
    }
    const Rational lead = d.leading();
    LocalZeta z{table.q(), num * (Rational(1) / lead), d * (Rational(1) / lead), std::nullopt};
    if (tail.ratio != 0) z.radius = Rational(1) / tail.ratio;
    return z;
}

/// t = q^{-s} for s with denominator 1 or 2.
inline SqrtExt t_at(std::int64_t q, const Rational& s) {
    const BigInt den = boost::multiprecision::denominator(s);
    if (den != 1 && den != 2)
        throw UnsupportedExponent("s = " + to_fraction_string(s) + " would need a root of q beyond the square root");
    const BigInt twice = -boost::multiprecision::numerator(s) * (den == 1 ? 2 : 1);
    return SqrtExt::sqrt_q_power(q, static_cast<std::int64_t>(twice));
}

/// Exact num(t)/den(t) at t = q^{-s}; outside the convergence region this is the analytic continuation.
inline SqrtExt evaluate(const LocalZeta& zeta, const Rational& s) {
    const SqrtExt t = t_at(zeta.q, s);
    const SqrtExt d = zeta.den(t);
    if (d.is_zero()) throw PoleAtPoint("pole of the local zeta function at s = " + to_fraction_string(s));
    return zeta.num(t) / d;
}

/// Whether rho * q^{-s} < 1, decided exactly through rho^2 q^{-2s} < 1.
inline bool in_convergence_region(const Rational& rho, std::int64_t q, const Rational& s) {
    if (rho == 0) return true;
    const BigInt den = boost::multiprecision::denominator(s);
    if (den != 1 && den != 2) throw UnsupportedExponent("s must have denominator 1 or 2");
    const auto twice = static_cast<std::int64_t>(-boost::multiprecision::numerator(s) * (den == 1 ? 2 : 1));
    return rho * rho * rpow(Rational(q), twice) < 1;
}

struct PartialSum {
    SqrtExt value;
    /// nullopt when the table carries no tail and none can be detected.
    std::optional<bool> in_region;
};

/// sum_{n <= N} vol(n) q^{-ns}, plus whether s lies where the full series converges.
inline PartialSum series_partial(const VolumeTable& table, const Rational& s, int N) {
    if (N < 0 || N > table.max_n())
        throw InsufficientEntries("partial sum to N = " + std::to_string(N) + " but the table stops at n = " +
                                  std::to_string(table.max_n()));
    const SqrtExt t = t_at(table.q(), s);
    SqrtExt acc(table.q());
    SqrtExt power(table.q(), 1);
    for (int n = 0; n <= N; ++n) {
        acc += power * table.vol(n);
        power *= t;
    }
    std::optional<GeometricTail> tail = table.tail();
    if (!tail) {
        try {
            tail = detect_tail(table.entries());
        } catch (const NoGeometricTail&) {
        }
    }
    std::optional<bool> region;
    if (tail) region = in_convergence_region(tail->ratio, table.q(), s);
    return {acc, region};
}

/// q^{-1/2} (1 + q^{-1/2} + q^{-1})
inline SqrtExt theorem_magnitude(std::int64_t q) {
    const SqrtExt r = SqrtExt::sqrt_q_power(q, -1);
    return r * (SqrtExt(q, 1) + r + SqrtExt::sqrt_q_power(q, -2));
}

struct TheoremReport {
    Avatar avatar;
    TernaryForm canonical;
    int kappa;
    LocalZeta zeta;
    SqrtExt lhs;  // |u theta|^{1/2} I_{-3/2}
    SqrtExt rhs;  // -kappa q^{-1/2} (1 + q^{-1/2} + q^{-1})
    bool pass;
};

/// Evaluates |u theta|^{1/2} I_s at s = -3/2 from the closed-form volumes and
/// compares it with -kappa q^{-1/2}(1 + q^{-1/2} + q^{-1}). |4| = 1 for odd p, so
/// the factor |4 u theta|^{1/2} is |u theta|^{1/2}.
inline TheoremReport theorem_check(const TernaryForm& form) {
    const auto cls = classify(form);
    const std::int64_t q = form.prime().value();
    const int k = cls.avatar.isotropic() ? 1 : -1;
    const VolumeTable table = closed_form_table(cls.avatar, q, closed_form_tail(cls.avatar, q).start + 2);
    LocalZeta zeta = closed_form_zeta(table);
    const SqrtExt value = evaluate(zeta, make_rational(-3, 2));
    const SqrtExt lhs = SqrtExt::sqrt_q_power(q, -cls.canonical.abs_utheta_val()) * value;
    const SqrtExt rhs = theorem_magnitude(q) * Rational(-k);
    return {cls.avatar, cls.canonical, k, std::move(zeta), lhs, rhs, lhs == rhs};
}

} // namespace padzeta
