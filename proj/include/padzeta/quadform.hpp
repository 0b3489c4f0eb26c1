#pragma once

// The diagonal ternary form x^2 + u y^2 - theta z^2 over Q_p and its
// reduction to one of a handful of canonical shapes.

#include "errors.hpp"
#include "padic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace padzeta {

/// x^2 + u y^2 - theta z^2, with theta a non-square so that F(sqrt(theta)) is a field.
class TernaryForm {
public:
    TernaryForm(const Prime& p, const Coefficient& u, const Coefficient& theta) : p_(p), u_(u), theta_(theta) {
        if (!(u.prime() == p) || !(theta.prime() == p))
            throw InvalidCoefficient("coefficients were built for a different prime");
        if (theta.is_square())
            throw InvalidTheta("theta = " + std::to_string(theta.unit()) +
                               " is a square in Q_" + std::to_string(p.value()) +
                               "; F(sqrt(theta)) would not be a field");
    }

    const Prime& prime() const noexcept { return p_; }
    const Coefficient& u() const noexcept { return u_; }
    const Coefficient& theta() const noexcept { return theta_; }

    /// v(u theta), so |u theta| = q^{-abs_utheta_val()}.
    int abs_utheta_val() const noexcept { return u_.val() + theta_.val(); }
    bool ramified() const noexcept { return theta_.val() == 1; }

    /// Integer coefficients (1, u, -theta) as exact integers.
    std::int64_t u_int() const noexcept { return u_.unit() * (u_.val() ? p_.value() : 1); }
    std::int64_t theta_int() const noexcept { return theta_.unit() * (theta_.val() ? p_.value() : 1); }

    std::string to_string() const {
        auto term = [](std::int64_t c, const char* var) {
            std::string s = c < 0 ? " - " : " + ";
            std::int64_t a = c < 0 ? -c : c;
            if (a != 1) s += std::to_string(a) + "*";
            return s + var + "^2";
        };
        return "x^2" + term(u_int(), "y") + term(-theta_int(), "z");
    }

    friend bool operator==(const TernaryForm& a, const TernaryForm& b) {
        return a.p_ == b.p_ && a.u_ == b.u_ && a.theta_ == b.theta_;
    }

private:
    Prime p_;
    Coefficient u_;
    Coefficient theta_;
};

enum class AvatarTag {
    A1_UnramifiedIsotropic,  // x^2 - y^2 - theta z^2, theta a unit non-square
    A2_RamifiedPiPi,         // x^2 + pi y^2 - pi z^2
    A3_RamifiedPiMinus1,     // x^2 - y^2 - pi z^2
    B_Anisotropic,
};

inline std::string_view tag_name(AvatarTag tag) {
    switch (tag) {
    case AvatarTag::A1_UnramifiedIsotropic: return "A1";
    case AvatarTag::A2_RamifiedPiPi: return "A2";
    case AvatarTag::A3_RamifiedPiMinus1: return "A3";
    case AvatarTag::B_Anisotropic: return "B";
    }
    return "?";
}

inline std::optional<AvatarTag> parse_tag(std::string_view s) {
    if (s == "A1") return AvatarTag::A1_UnramifiedIsotropic;
    if (s == "A2") return AvatarTag::A2_RamifiedPiPi;
    if (s == "A3") return AvatarTag::A3_RamifiedPiMinus1;
    if (s == "B") return AvatarTag::B_Anisotropic;
    return std::nullopt;
}

struct Avatar {
    AvatarTag tag;
    int abs_utheta_val;  // |u theta| = q^{-abs_utheta_val}

    bool isotropic() const noexcept { return tag != AvatarTag::B_Anisotropic; }
    friend bool operator==(const Avatar&, const Avatar&) = default;
};

struct Classification {
    Avatar avatar;
    TernaryForm canonical;
};

/// Reduces the form to its canonical shape.
///
/// Isotropy is decided by the norm-group description of F(sqrt(theta)):
/// unramified theta has norm group pi^{2Z} R^x, so the form is isotropic iff
/// v(u) = 0; ramified theta has norm group (-theta)^Z R^{x2}, so the form is
/// isotropic iff -u is in R^{x2} or in -theta R^{x2}.
///
/// Canonical forms keep theta and replace u:
///   A1: u = -1          A2: u = theta        A3: u = -1
///   B, unramified theta:            u = p
///   B, ramified theta, v(u) = 0:    u = eps, the least eps > 0 with -eps a non-residue
///   B, ramified theta, v(u) = 1:    u = theta * eta, eta the least non-residue
inline Classification classify(const TernaryForm& form) {
    const Prime& p = form.prime();
    const Coefficient& u = form.u();
    const Coefficient& theta = form.theta();
    const int abs_val = form.abs_utheta_val();

    auto make = [&](AvatarTag tag, const Coefficient& new_u) {
        return Classification{Avatar{tag, abs_val}, TernaryForm(p, new_u, theta)};
    };
    const Coefficient minus_one(p, 0, -1);

    if (!form.ramified()) {
        if (u.val() == 0) return make(AvatarTag::A1_UnramifiedIsotropic, minus_one);
        return make(AvatarTag::B_Anisotropic, Coefficient(p, 1, 1));
    }

    if (u.val() == 0) {
        // -u in R^{x2}
        if (legendre(-u.unit(), p) == 1) return make(AvatarTag::A3_RamifiedPiMinus1, minus_one);
        std::int64_t eps = 1;
        while (legendre(-eps, p) != -1) ++eps;
        return make(AvatarTag::B_Anisotropic, Coefficient(p, 0, eps));
    }

    // v(u) = 1: -u in -theta R^{x2} iff u/theta is a unit square.
    if (legendre(u.unit(), p) == legendre(theta.unit(), p)) return make(AvatarTag::A2_RamifiedPiPi, theta);
    const std::int64_t eta = smallest_nonresidue(p);
    const std::int64_t unit = detail::mod_floor(detail::mod_floor(theta.unit(), p) * eta, p);
    return make(AvatarTag::B_Anisotropic, Coefficient(p, 1, unit));
}

/// +1 for isotropic forms, -1 for anisotropic ones.
inline int kappa(const TernaryForm& form) {
    return classify(form).avatar.isotropic() ? 1 : -1;
}

/// Reference instance of each avatar at prime p:
/// A1: u = -1, theta = least non-residue; A2: u = theta = p; A3: u = -1, theta = p;
/// B: u = p, theta = least non-residue.
inline TernaryForm avatar_form(const Prime& p, AvatarTag tag) {
    const Coefficient nonres(p, 0, smallest_nonresidue(p));
    const Coefficient pi(p, 1, 1);
    const Coefficient minus_one(p, 0, -1);
    switch (tag) {
    case AvatarTag::A1_UnramifiedIsotropic: return TernaryForm(p, minus_one, nonres);
    case AvatarTag::A2_RamifiedPiPi: return TernaryForm(p, pi, pi);
    case AvatarTag::A3_RamifiedPiMinus1: return TernaryForm(p, minus_one, pi);
    case AvatarTag::B_Anisotropic: return TernaryForm(p, pi, nonres);
    }
    throw InvalidCoefficient("unknown avatar tag");
}

} // namespace padzeta
