#pragma once

// Shell volumes Vol(V_n^0) of x^2 + u y^2 - theta z^2 on primitive vectors of Z_p^3.
//
// Measure: additive Haar measure with Vol(Z_p^3) = 1; V_n^0 is normalized as
// Vol(V_n) / (1 - 1/q). Two independent routes are provided: closed forms per
// avatar, and exact counting of solutions modulo p^k by level lifting.

#include "errors.hpp"
#include "padic.hpp"
#include "quadform.hpp"
#include "rational.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace padzeta {

/// vol(n) = amplitude * ratio^n for every n >= start.
struct GeometricTail {
    Rational amplitude;
    Rational ratio;
    int start = 0;

    Rational at(int n) const { return amplitude * rpow(ratio, n); }
    friend bool operator==(const GeometricTail&, const GeometricTail&) = default;
};

struct VolumeEntry {
    int n;
    Rational vol;
};

class VolumeTable {
public:
    VolumeTable(std::int64_t q, std::vector<VolumeEntry> entries, std::optional<GeometricTail> tail = std::nullopt)
        : q_(q), entries_(std::move(entries)), tail_(std::move(tail)) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i].n != static_cast<int>(i))
                throw InsufficientEntries("volume table entries must be indexed 0, 1, 2, ... without gaps");
            if (entries_[i].vol < 0) throw InvalidCoefficient("negative shell volume at n = " + std::to_string(i));
        }
        if (tail_) {
            if (tail_->ratio < 0 || tail_->ratio >= 1)
                throw NoGeometricTail("tail ratio must lie in [0, 1)");
            for (const auto& e : entries_)
                if (e.n >= tail_->start && e.vol != tail_->at(e.n))
                    throw NoGeometricTail("entry n = " + std::to_string(e.n) + " disagrees with the tail model");
        }
    }

    std::int64_t q() const noexcept { return q_; }
    const std::vector<VolumeEntry>& entries() const noexcept { return entries_; }
    const std::optional<GeometricTail>& tail() const noexcept { return tail_; }
    int max_n() const noexcept { return static_cast<int>(entries_.size()) - 1; }

    /// Vol(V_n^0), from the stored entries or, past them, from the tail.
    Rational vol(int n) const {
        if (n >= 0 && n < static_cast<int>(entries_.size())) return entries_[static_cast<std::size_t>(n)].vol;
        if (tail_ && n >= tail_->start) return tail_->at(n);
        throw InsufficientEntries("no volume recorded for n = " + std::to_string(n));
    }

    /// (1 - 1/q) * sum_n vol(n), summed in closed form through the tail.
    Rational total_mass() const {
        if (!tail_) throw NoGeometricTail("total mass needs a tail model");
        Rational sum = 0;
        for (int n = 0; n < tail_->start; ++n) sum += vol(n);
        sum += tail_->at(tail_->start) / (1 - tail_->ratio);
        return (1 - Rational(1) / q_) * sum;
    }

private:
    std::int64_t q_;
    std::vector<VolumeEntry> entries_;
    std::optional<GeometricTail> tail_;
};

/// Geometric tail of the closed-form table of each avatar.
inline GeometricTail closed_form_tail(const Avatar& avatar, std::int64_t q) {
    const Rational inv_q = Rational(1) / q;
    switch (avatar.tag) {
    case AvatarTag::A1_UnramifiedIsotropic: return {(1 - inv_q) * (1 + inv_q), inv_q, 1};
    case AvatarTag::A2_RamifiedPiPi:
    case AvatarTag::A3_RamifiedPiMinus1: return {2 * (1 - inv_q), inv_q, 2};
    case AvatarTag::B_Anisotropic: return {Rational(0), Rational(0), 2};
    }
    throw InvalidCoefficient("unknown avatar tag");
}

/// Exact Vol(V_n^0) for the canonical form of the given avatar.
///
///   A3 (|u theta| = 1/q):   1-1/q,  2q^{-1}(1-1/q) + q^{-2},  then 2q^{-n}(1-1/q)
///   A2 (|u theta| = 1/q^2): 1,      q^{-1}(1-1/q),            then 2q^{-n}(1-1/q)
///   A1 (|u theta| = 1):     1,      then q^{-n}(1-1/q)(1+1/q)
///   B, |u theta| = 1/q:     1+1/q,  q^{-2},                   then 0
///   B, |u theta| = 1/q^2:   1,      q^{-1}(1+1/q),            then 0
inline Rational closed_form_vol(const Avatar& avatar, int n, std::int64_t q) {
    if (n < 0) throw InsufficientEntries("shell index must be >= 0");
    const Rational inv_q = Rational(1) / q;
    switch (avatar.tag) {
    case AvatarTag::A3_RamifiedPiMinus1:
        if (n == 0) return 1 - inv_q;
        if (n == 1) return 2 * inv_q * (1 - inv_q) + inv_q * inv_q;
        break;
    case AvatarTag::A2_RamifiedPiPi:
        if (n == 0) return 1;
        if (n == 1) return inv_q * (1 - inv_q);
        break;
    case AvatarTag::A1_UnramifiedIsotropic:
        if (n == 0) return 1;
        break;
    case AvatarTag::B_Anisotropic:
        if (avatar.abs_utheta_val == 2) {
            if (n == 0) return 1;
            if (n == 1) return inv_q * (1 + inv_q);
        } else {
            if (n == 0) return 1 + inv_q;
            if (n == 1) return inv_q * inv_q;
        }
        break;
    }
    return closed_form_tail(avatar, q).at(n);
}

inline VolumeTable closed_form_table(const Avatar& avatar, std::int64_t q, int max_n) {
    std::vector<VolumeEntry> entries;
    for (int n = 0; n <= max_n; ++n) entries.push_back({n, closed_form_vol(avatar, n, q)});
    return VolumeTable(q, std::move(entries), closed_form_tail(avatar, q));
}

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

namespace detail {

// Residues are kept below p^kmax <= 2^40, so every product fits in __int128.
inline constexpr std::uint64_t kMaxModulus = 1ULL << 40;

struct LiftContext {
    std::uint64_t p;
    std::uint64_t modulus;  // p^kmax
    std::vector<std::uint64_t> powers;  // p^0 .. p^kmax
    std::uint64_t u_mod;
    std::uint64_t neg_theta_mod;
    int kmax;

    std::uint64_t form_mod(std::uint64_t x, std::uint64_t y, std::uint64_t z, std::uint64_t m) const {
        using u128 = unsigned __int128;
        const u128 mm = m;
        u128 r = (u128(x) * x) % mm;
        r += (u128(u_mod % m) * ((u128(y) * y) % mm)) % mm;
        r += (u128(neg_theta_mod % m) * ((u128(z) * z) % mm)) % mm;
        return static_cast<std::uint64_t>(r % mm);
    }
};

inline std::uint64_t to_mod(std::int64_t v, std::uint64_t m) {
    const auto sm = static_cast<__int128>(m);
    __int128 r = static_cast<__int128>(v) % sm;
    if (r < 0) r += sm;
    return static_cast<std::uint64_t>(r);
}

// Depth-first lifting of one level-j solution; counts[i] accumulates N_{i+1}.
inline void lift(const LiftContext& ctx, std::uint64_t x, std::uint64_t y, std::uint64_t z, int level,
                 std::vector<std::uint64_t>& counts, std::atomic<std::uint64_t>& visited, std::uint64_t budget) {
    counts[static_cast<std::size_t>(level - 1)] += 1;
    if (visited.fetch_add(1, std::memory_order_relaxed) + 1 > budget)
        throw ResourceLimit("node budget of " + std::to_string(budget) + " exceeded while lifting to level " +
                                std::to_string(level + 1),
                            level + 1);
    if (level == ctx.kmax) return;
    const std::uint64_t step = ctx.powers[static_cast<std::size_t>(level)];
    const std::uint64_t next = ctx.powers[static_cast<std::size_t>(level + 1)];
    for (std::uint64_t a = 0; a < ctx.p; ++a) {
        const std::uint64_t xx = x + a * step;
        for (std::uint64_t b = 0; b < ctx.p; ++b) {
            const std::uint64_t yy = y + b * step;
            for (std::uint64_t c = 0; c < ctx.p; ++c) {
                const std::uint64_t zz = z + c * step;
                if (ctx.form_mod(xx, yy, zz, next) == 0) lift(ctx, xx, yy, zz, level + 1, counts, visited, budget);
            }
        }
    }
}

} // namespace detail

/// N_1 .. N_kmax (index k-1), where
/// N_k = #{(x,y,z) mod p^k : Q(x,y,z) = 0 mod p^k, not all of x, y, z divisible by p}.
///
/// Solutions mod p are lifted digit by digit, so the work is proportional to
/// the number of solutions rather than p^{3k}. Level-1 roots are split across
/// worker threads.
inline std::vector<std::uint64_t> count_levels(const TernaryForm& form, int kmax,
                                               std::uint64_t node_budget = kDefaultNodeBudget,
                                               unsigned threads = 0) {
    if (kmax < 1) throw InsufficientEntries("count level must be >= 1");
    const auto p = static_cast<std::uint64_t>(form.prime().value());

    detail::LiftContext ctx{p, 1, {1}, 0, 0, kmax};
    for (int k = 1; k <= kmax; ++k) {
        if (ctx.modulus > detail::kMaxModulus / p)
            throw ResourceLimit("modulus p^" + std::to_string(k) + " is too large for exact counting", k);
        ctx.modulus *= p;
        ctx.powers.push_back(ctx.modulus);
    }
    // Isotropic counts grow like c p^{2k} with c < 3.
    long double predicted_nodes = 3.0L;
    for (int k = 0; k < kmax; ++k) predicted_nodes *= static_cast<long double>(p) * static_cast<long double>(p);
    if (predicted_nodes > static_cast<long double>(node_budget))
        throw ResourceLimit("predicted node count for level " + std::to_string(kmax) + " exceeds budget of " +
                                std::to_string(node_budget),
                            kmax);

    ctx.u_mod = detail::to_mod(form.u_int(), ctx.modulus);
    ctx.neg_theta_mod = detail::to_mod(-form.theta_int(), ctx.modulus);

    std::vector<std::array<std::uint64_t, 3>> roots;
    for (std::uint64_t x = 0; x < p; ++x)
        for (std::uint64_t y = 0; y < p; ++y)
            for (std::uint64_t z = 0; z < p; ++z)
                if ((x | y | z) != 0 && ctx.form_mod(x, y, z, p) == 0) roots.push_back({x, y, z});

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, roots.size())));

    std::atomic<std::uint64_t> visited{0};
    auto worker = [&](unsigned index) {
        std::vector<std::uint64_t> local(static_cast<std::size_t>(kmax), 0);
        for (std::size_t i = index; i < roots.size(); i += threads)
            detail::lift(ctx, roots[i][0], roots[i][1], roots[i][2], 1, local, visited, node_budget);
        return local;
    };

    std::vector<std::future<std::vector<std::uint64_t>>> jobs;
    for (unsigned t = 1; t < threads; ++t) jobs.push_back(std::async(std::launch::async, worker, t));
    std::vector<std::uint64_t> counts = worker(0);
    for (auto& job : jobs) {
        auto part = job.get();
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += part[i];
    }
    return counts;
}

inline std::uint64_t count_level(const TernaryForm& form, int k, std::uint64_t node_budget = kDefaultNodeBudget) {
    return count_levels(form, k, node_budget).back();
}

/// S_0 .. S_kmax with S_0 = 1 - p^{-3} and S_k = N_k / p^{3k}: the measure of
/// primitive vectors with |Q| <= q^{-k}.
inline std::vector<Rational> level_measures(const TernaryForm& form, int kmax,
                                            std::uint64_t node_budget = kDefaultNodeBudget) {
    const std::int64_t p = form.prime().value();
    std::vector<Rational> s{1 - rpow(Rational(p), -3)};
    if (kmax == 0) return s;
    const auto counts = count_levels(form, kmax, node_budget);
    for (int k = 1; k <= kmax; ++k)
        s.push_back(Rational(BigInt(counts[static_cast<std::size_t>(k - 1)])) * rpow(Rational(p), -3 * k));
    return s;
}

/// Vol(V_n^0) for n = 0..max_n by counting; needs levels up to max_n + 1.
inline VolumeTable oracle_table(const TernaryForm& form, int max_n, std::uint64_t node_budget = kDefaultNodeBudget) {
    const std::int64_t p = form.prime().value();
    std::vector<Rational> s;
    try {
        s = level_measures(form, max_n + 1, node_budget);
    } catch (const ResourceLimit& e) {
        throw ResourceLimit(std::string(e.what()) + " (shell n = " + std::to_string(e.level() - 1) + ")",
                            e.level() - 1);
    }
    const Rational norm = 1 - Rational(1) / p;
    std::vector<VolumeEntry> entries;
    for (int n = 0; n <= max_n; ++n)
        entries.push_back({n, (s[static_cast<std::size_t>(n)] - s[static_cast<std::size_t>(n + 1)]) / norm});
    return VolumeTable(p, std::move(entries));
}

inline Rational oracle_vol(const TernaryForm& form, int n, std::uint64_t node_budget = kDefaultNodeBudget) {
    return oracle_table(form, n, node_budget).vol(n);
}

/// Closed-form table for the form, via its avatar.
inline VolumeTable volumes(const TernaryForm& form, int max_n) {
    return closed_form_table(classify(form).avatar, form.prime().value(), max_n);
}

} // namespace padzeta
