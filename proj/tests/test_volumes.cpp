#include "oracles.hpp"

#include <padzeta/volumes.hpp>

#include <gtest/gtest.h>

using namespace padzeta;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

const std::array kAllTags{AvatarTag::A1_UnramifiedIsotropic, AvatarTag::A2_RamifiedPiPi,
                          AvatarTag::A3_RamifiedPiMinus1, AvatarTag::B_Anisotropic};

// The ramified anisotropic shape with |u theta| = q^-2: u = theta * (non-residue).
TernaryForm ramified_anisotropic_pi_pi(const Prime& p) {
    return TernaryForm(p, Coefficient(p, 1, smallest_nonresidue(p)), Coefficient(p, 1, 1));
}

// The ramified anisotropic shape with |u theta| = q^-1: -u a unit non-residue.
TernaryForm ramified_anisotropic_unit_u(const Prime& p) {
    return classify(TernaryForm(p, Coefficient(p, 0, -smallest_nonresidue(p)), Coefficient(p, 1, 1))).canonical;
}

std::vector<TernaryForm> all_shapes(const Prime& p) {
    std::vector<TernaryForm> out;
    for (auto tag : kAllTags) out.push_back(avatar_form(p, tag));
    out.push_back(ramified_anisotropic_unit_u(p));
    out.push_back(ramified_anisotropic_pi_pi(p));
    return out;
}

} // namespace

TEST(ClosedForm, Examples) {
    EXPECT_EQ(closed_form_vol({AvatarTag::A3_RamifiedPiMinus1, 1}, 1, 3), r(5, 9));
    EXPECT_EQ(closed_form_vol({AvatarTag::A2_RamifiedPiPi, 2}, 0, 7), r(1));
    EXPECT_EQ(closed_form_vol({AvatarTag::A1_UnramifiedIsotropic, 0}, 2, 3), r(8, 81));
    EXPECT_EQ(closed_form_vol({AvatarTag::B_Anisotropic, 1}, 1, 5), r(1, 25));
    EXPECT_EQ(closed_form_vol({AvatarTag::B_Anisotropic, 1}, 3, 5), r(0));
}

TEST(ClosedForm, AllBranches) {
    const Avatar a3{AvatarTag::A3_RamifiedPiMinus1, 1}, a2{AvatarTag::A2_RamifiedPiPi, 2},
        a1{AvatarTag::A1_UnramifiedIsotropic, 0}, b2{AvatarTag::B_Anisotropic, 2};
    EXPECT_EQ(closed_form_vol(a3, 0, 3), r(2, 3));
    EXPECT_EQ(closed_form_vol(a3, 2, 3), r(4, 27));
    EXPECT_EQ(closed_form_vol(a2, 1, 5), r(4, 25));
    EXPECT_EQ(closed_form_vol(a2, 3, 5), r(8, 625));
    EXPECT_EQ(closed_form_vol(a1, 0, 11), r(1));
    EXPECT_EQ(closed_form_vol(a1, 1, 5), r(24, 125));
    EXPECT_EQ(closed_form_vol(b2, 0, 3), r(1));
    EXPECT_EQ(closed_form_vol(b2, 1, 3), r(4, 9));
    EXPECT_EQ(closed_form_vol(b2, 2, 3), r(0));
    EXPECT_THROW(closed_form_vol(a1, -1, 3), InsufficientEntries);
}

// Hand-checked brute-force counts, frozen.
TEST(CountLevel, Examples) {
    const Prime p(3);
    EXPECT_EQ(count_level(avatar_form(p, AvatarTag::A1_UnramifiedIsotropic), 1), 8u);
    EXPECT_EQ(count_level(avatar_form(p, AvatarTag::A3_RamifiedPiMinus1), 1), 14u);
    EXPECT_EQ(count_levels(avatar_form(p, AvatarTag::A1_UnramifiedIsotropic), 3),
              (std::vector<std::uint64_t>{8, 72, 648}));
    EXPECT_EQ(count_levels(avatar_form(p, AvatarTag::A3_RamifiedPiMinus1), 3),
              (std::vector<std::uint64_t>{14, 108, 972}));
    EXPECT_EQ(count_levels(avatar_form(p, AvatarTag::A2_RamifiedPiPi), 3), (std::vector<std::uint64_t>{8, 108, 972}));
}

TEST(CountLevel, MatchesBruteForce) {
    for (std::int64_t pv : {3, 5}) {
        const Prime p(pv);
        const int kmax = pv == 3 ? 3 : 2;
        for (const auto& f : all_shapes(p)) {
            const auto counts = count_levels(f, kmax);
            for (int k = 1; k <= kmax; ++k) {
                const auto brute = oracle::brute_solutions(pv, f.u_int(), f.theta_int(), k).size();
                EXPECT_EQ(counts[static_cast<std::size_t>(k - 1)], brute) << f.to_string() << " k=" << k;
                EXPECT_LE(brute, static_cast<std::size_t>(oracle::ipow(pv, 3 * k) - oracle::ipow(pv, 3 * (k - 1))));
            }
        }
    }
}

TEST(CountLevel, SingleThreadedAgrees) {
    const auto f = avatar_form(Prime(5), AvatarTag::A2_RamifiedPiPi);
    EXPECT_EQ(count_levels(f, 3, kDefaultNodeBudget, 1), count_levels(f, 3, kDefaultNodeBudget, 4));
}

TEST(CountLevel, UnitScalingInvariance) {
    const std::int64_t p = 3;
    const Prime pp(p);
    for (const auto& f : all_shapes(pp)) {
        for (int k = 1; k <= 3; ++k) {
            const std::int64_t m = oracle::ipow(p, k);
            const auto sols = oracle::brute_solutions(p, f.u_int(), f.theta_int(), k);
            EXPECT_EQ(count_level(f, k), sols.size());
            for (std::int64_t alpha = 1; alpha < m; ++alpha) {
                if (alpha % p == 0) continue;
                std::set<std::array<std::int64_t, 3>> mapped;
                for (const auto& v : sols) mapped.insert({v[0] * alpha % m, v[1] * alpha % m, v[2] * alpha % m});
                EXPECT_EQ(mapped, sols) << f.to_string() << " k=" << k << " alpha=" << alpha;
            }
        }
    }
}

TEST(CountLevel, ResourceLimit) {
    const auto f = avatar_form(Prime(7), AvatarTag::A1_UnramifiedIsotropic);
    EXPECT_THROW(count_level(f, 3, 1000), ResourceLimit);
    try {
        oracle_table(f, 4, 1000);
        FAIL() << "expected ResourceLimit";
    } catch (const ResourceLimit& e) {
        EXPECT_NE(std::string(e.what()).find("shell n ="), std::string::npos);
    }
    EXPECT_THROW(count_level(f, 0), InsufficientEntries);
}

TEST(Oracle, Examples) {
    const Prime p3(3), p5(5);
    EXPECT_EQ(oracle_vol(avatar_form(p3, AvatarTag::A3_RamifiedPiMinus1), 0), r(2, 3));
    EXPECT_EQ(oracle_vol(avatar_form(p3, AvatarTag::A1_UnramifiedIsotropic), 0), r(1));
    EXPECT_EQ(oracle_vol(avatar_form(p5, AvatarTag::A2_RamifiedPiPi), 1), r(4, 25));
}

TEST(Oracle, AgreesWithClosedForms) {
    for (std::int64_t pv : {3, 5, 7}) {
        const Prime p(pv);
        const int max_n = pv == 3 ? 4 : (pv == 5 ? 3 : 2);
        for (const auto& f : all_shapes(p)) {
            const auto avatar = classify(f).avatar;
            const auto table = oracle_table(f, max_n);
            for (int n = 0; n <= max_n; ++n)
                EXPECT_EQ(table.vol(n), closed_form_vol(avatar, n, pv)) << f.to_string() << " n=" << n;
        }
    }
}

// Non-canonical inputs have the same shell volumes as their canonical avatar.
TEST(Oracle, NonCanonicalInputsMatchAvatarTable) {
    const Prime p(5);
    for (int uv = 0; uv <= 1; ++uv)
        for (std::int64_t uu : {1, 2, 3, 4})
            for (int tv = 0; tv <= 1; ++tv)
                for (std::int64_t tu : {1, 2, 3}) {
                    const Coefficient theta(p, tv, tu);
                    if (theta.is_square()) continue;
                    const TernaryForm f(p, Coefficient(p, uv, uu), theta);
                    const auto avatar = classify(f).avatar;
                    const auto table = oracle_table(f, 2);
                    for (int n = 0; n <= 2; ++n)
                        EXPECT_EQ(table.vol(n), closed_form_vol(avatar, n, 5)) << f.to_string() << " n=" << n;
                }
}

TEST(Oracle, LevelMeasuresMonotone) {
    for (const auto& f : all_shapes(Prime(3))) {
        const auto s = level_measures(f, 5);
        const bool iso = classify(f).avatar.isotropic();
        for (std::size_t k = 1; k < s.size(); ++k) {
            EXPECT_LE(s[k], s[k - 1]);
            if (iso) {
                EXPECT_GT(s[k], 0);
            }
            if (!iso && k >= 2) {
                EXPECT_EQ(s[k], 0);
            }
        }
    }
}

TEST(Oracle, LevelCountGrowthIsPSquared) {
    for (auto tag : {AvatarTag::A1_UnramifiedIsotropic, AvatarTag::A2_RamifiedPiPi, AvatarTag::A3_RamifiedPiMinus1}) {
        const auto counts = count_levels(avatar_form(Prime(3), tag), 5);
        EXPECT_EQ(counts[4], 9 * counts[3]);
        EXPECT_EQ(counts[3], 9 * counts[2]);
    }
}

TEST(VolumeTable, MassIdentity) {
    for (std::int64_t q : {3, 5, 7, 11}) {
        for (auto tag : kAllTags) {
            const Avatar avatar{tag, classify(avatar_form(Prime(q), tag)).avatar.abs_utheta_val};
            EXPECT_EQ(closed_form_table(avatar, q, 5).total_mass(), 1 - rpow(Rational(q), -3));
        }
        EXPECT_EQ(closed_form_table({AvatarTag::B_Anisotropic, 2}, q, 5).total_mass(), 1 - rpow(Rational(q), -3));
    }
}

TEST(VolumeTable, InvariantsEnforced) {
    EXPECT_THROW(VolumeTable(3, {{0, r(-1)}}), InvalidCoefficient);
    EXPECT_THROW(VolumeTable(3, {{1, r(1)}}), InsufficientEntries);
    EXPECT_THROW(VolumeTable(3, {{0, r(1)}, {1, r(1, 2)}}, GeometricTail{r(1), r(1, 3), 0}), NoGeometricTail);
    EXPECT_THROW(VolumeTable(3, {{0, r(1)}}, GeometricTail{r(1), r(1), 0}), NoGeometricTail);
    const VolumeTable t(3, {{0, r(1)}}, GeometricTail{r(1), r(1, 3), 0});
    EXPECT_EQ(t.vol(4), r(1, 81));
    EXPECT_THROW(VolumeTable(3, {{0, r(1)}}).vol(1), InsufficientEntries);
}
