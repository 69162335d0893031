#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "terracini/curves.hpp"
#include "terracini/elliptic.hpp"
#include "terracini/terracini.hpp"

namespace terracini {

inline constexpr int kRetryBudget = 16;

// Exact counts replacing the asymptotic bounds of the existence argument:
// with Y a degree-e rational curve with complete restricted series,
// h0(Y, O(m)|_Y) = e*m + 1, dependence of 2S on Y needs 2k > h0, and the
// ambient span bound needs k(n+1) < C(n+m, n).
struct ThresholdReport {
    unsigned n = 0, m = 0, e = 0;
    std::size_t ambient_dim = 0;    // M = C(n+m, n)
    std::size_t h0_restricted = 0;  // e*m + 1
    std::size_t paper_k = 0;        // ceil(h0/2) + 1
    std::size_t minimal_k = 0;      // floor(h0/2) + 1, the sharp boundary
    std::size_t k_max_span = 0;     // largest k with k(n+1) < M
    bool feasible = false;          // minimal_k <= k_max_span
};

inline ThresholdReport thresholds(unsigned n, unsigned m, unsigned e) {
    if (n < 2) throw InvalidInput("thresholds require n >= 2");
    if (m < 1 || e < 1) throw InvalidInput("thresholds require m >= 1, e >= 1");
    ThresholdReport r;
    r.n = n;
    r.m = m;
    r.e = e;
    r.ambient_dim = static_cast<std::size_t>(dim_forms(n, m));
    r.h0_restricted = static_cast<std::size_t>(e) * m + 1;
    r.paper_k = (r.h0_restricted + 1) / 2 + 1;
    r.minimal_k = r.h0_restricted / 2 + 1;
    r.k_max_span = (r.ambient_dim - 1) / (n + 1);
    r.feasible = r.minimal_k <= r.k_max_span;
    return r;
}

// Curve-level rank data attached to a certified example.
struct CurveLevelData {
    std::size_t rank = 0;
    std::size_t conditions = 0;  // 2k
    std::size_t system_dim = 0;  // e*m+1 (rational) or 3d' (cubic)
    std::size_t h0 = 0, h1 = 0;
};

template <class F>
struct CertifiedExample {
    std::string construction;
    unsigned n = 0, m = 0;
    std::size_t k = 0;
    std::uint64_t seed = 0;
    PointSet<F> points;
    MembershipVerdict verdict;
    CurveLevelData curve;
    bool certified = false;
};

// Curve-level dependence forces ambient dependence (the row block of the
// ambient matrix indexed by S can only lose rank relative to the restricted
// jets): checks the implication on this instance's ranks.
template <class F>
bool surjection_check(const CertifiedExample<F>& ex) {
    const bool curve_deficient = ex.curve.rank < ex.curve.conditions;
    const bool ambient_deficient = ex.verdict.rank < ex.verdict.conditions;
    return !curve_deficient || ambient_deficient;
}

// k points on a low-degree rational curve, chosen so the double points
// overload the restricted series (2k > e*m+1) while the ambient span bound
// k(n+1) < C(n+m,n) still holds; membership is then certified by two rank
// computations.
template <class F>
CertifiedExample<F> construct_on_rational_curve(const F& field, unsigned n, unsigned m,
                                                const RationalCurve<F>& curve,
                                                std::optional<std::size_t> k_opt,
                                                std::uint64_t seed,
                                                RankStrategy strategy = RankStrategy::fraction_free()) {
    if (curve.ambient_n != n) throw InvalidInput("curve ambient dimension != n");
    const ThresholdReport th = thresholds(n, m, curve.degree);
    const std::size_t k = k_opt.value_or(th.minimal_k);
    if (2 * k <= th.h0_restricted || k * (n + 1) >= th.ambient_dim) {
        std::ostringstream msg;
        msg << "infeasible parameters: k=" << k << " needs 2k > " << th.h0_restricted
            << " and k(n+1) < " << th.ambient_dim << " (minimal_k=" << th.minimal_k
            << ", k_max_span=" << th.k_max_span << ")";
        throw Infeasible(msg.str());
    }
    const std::size_t expected_curve_rank = std::min(2 * k, th.h0_restricted);
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        try {
            const auto params = sample_params(field, k, rng);
            std::vector<ProjectivePoint<F>> pts;
            for (const auto& p : params) pts.push_back(point_on_curve(field, curve, p));
            const PointSet<F> set = make_point_set(field, n, std::move(pts));

            const auto curve_mat = curve_jet_conditions(field, curve, params, m);
            const std::size_t curve_rank = exact_rank(field, curve_mat);
            if (curve_rank < expected_curve_rank) continue;  // degenerate draw

            MembershipVerdict v;
            if constexpr (F::is_prime_field) {
                v = membership(field, set, m);
            } else {
                RankStrategy s = strategy;
                s.seed = derive_seed(seed, 0xa11b ^ static_cast<std::uint64_t>(attempt));
                v = membership(field, set, m, s);
            }
            // Genericity is enforced at curve level only. The ambient rank can
            // legitimately fall below k(n+1) - (2k - h0) when the curve is
            // degenerate in P^n (e.g. a conic in P^3 picks up extra
            // deficiency from the plane it spans), so no ambient-rank gate.

            CertifiedExample<F> ex{"rational-curve", n, m, k, seed, set, v, {}, false};
            ex.curve.rank = curve_rank;
            ex.curve.conditions = 2 * k;
            ex.curve.system_dim = th.h0_restricted;
            ex.curve.h0 = th.h0_restricted - curve_rank;
            ex.curve.h1 = 2 * k - curve_rank;
            ex.certified = v.member && v.certified;
            return ex;
        } catch (const InvalidInput&) {
            continue;  // coincident points from a degenerate draw; resample
        }
    }
    throw RetryExhausted("construct_on_rational_curve: retry budget exhausted");
}

namespace detail {

template <class F>
std::vector<ECPoint<F>> sample_halved_divisor(const F& field, const WeierstrassCurve<F>& curve,
                                              std::size_t k, const ECPoint<F>& target, Rng& rng,
                                              const std::optional<ECPoint<F>>& base) {
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::vector<ECPoint<F>> pts;
        while (pts.size() + 1 < k) {
            ECPoint<F> p;
            if constexpr (F::is_prime_field) {
                p = ec_random_point(field, curve, rng);
            } else {
                if (!base) throw InvalidInput("rational-field mode needs a base point");
                p = ec_random_point(field, curve, rng, *base);
            }
            bool dup = false;
            for (const auto& q : pts)
                if (ec_equal(field, p, q)) dup = true;
            if (!dup) pts.push_back(p);
        }
        const ECPoint<F> last = ec_solve_last_point(field, curve, pts, target);
        bool collision = false;
        for (const auto& q : pts)
            if (ec_equal(field, last, q)) collision = true;
        if (collision) continue;
        pts.push_back(last);
        return pts;
    }
    throw RetryExhausted("elliptic sampling: retry budget exhausted");
}

}  // namespace detail

// The even-degree recipe on a smooth plane cubic: k = 3d'/2 points whose
// group-law sum is a 2-torsion point, so 2S lies in |O_C(d')| and imposes
// dependent conditions (h0 = h1 = 1 at the degree-0 residual).
template <class F>
CertifiedExample<F> construct_elliptic_even(const F& field, const WeierstrassCurve<F>& curve,
                                            unsigned dprime, std::uint64_t seed,
                                            ECPoint<F> target = ECPoint<F>::infinity(),
                                            std::optional<ECPoint<F>> base = std::nullopt) {
    if (dprime % 2 != 0)
        throw Infeasible("odd d' = " + std::to_string(dprime) +
                         ": Terracini loci are empty in the odd case, nothing to construct");
    if (3 * dprime < 6) throw Infeasible("3d' >= 6 required");
    const std::size_t k = 3 * dprime / 2;
    const std::size_t system_dim = 3 * dprime;
    const std::size_t expected_rank = std::min(2 * k, system_dim) - 1;
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        Rng rng(derive_seed(seed, 0xe11 ^ static_cast<std::uint64_t>(attempt)));
        const auto pts = detail::sample_halved_divisor(field, curve, k, target, rng, base);
        const auto mat = cubic_conditions_matrix(field, curve, pts, dprime);
        const std::size_t r = exact_rank(field, mat);
        if (r != expected_rank) continue;  // degenerate draw
        std::vector<ProjectivePoint<F>> proj;
        for (const auto& p : pts) proj.push_back(ec_to_projective(field, p));
        CertifiedExample<F> ex;
        ex.construction = "elliptic-even";
        ex.n = 2;
        ex.m = dprime;
        ex.k = k;
        ex.seed = seed;
        ex.points = make_point_set(field, 2, std::move(proj));
        ex.verdict = make_verdict(r, 2 * k, system_dim, true,
                                  F::is_prime_field ? RankMethod::modular : RankMethod::fraction_free,
                                  field.characteristic());
        ex.curve.rank = r;
        ex.curve.conditions = 2 * k;
        ex.curve.system_dim = system_dim;
        ex.curve.h0 = system_dim - r;
        ex.curve.h1 = 2 * k - r;
        ex.certified = ex.verdict.member;
        return ex;
    }
    throw RetryExhausted("construct_elliptic_even: retry budget exhausted");
}

// Emptiness probes: rational normal curves (every k) and odd-degree cubic
// re-embeddings. A report of "no member found" is sampling evidence
// consistent with emptiness, never a proof.
template <class F>
ProbeReport probe_emptiness_rnc(const F& field, unsigned dprime, std::size_t k, int trials,
                                std::uint64_t seed) {
    if (trials < 1) throw InvalidInput("trials must be >= 1");
    const RationalCurve<F> curve = rational_normal_curve(field, dprime);
    ProbeReport report;
    report.target = "rnc";
    report.n = 1;
    report.d = dprime;
    report.k = k;
    report.trials = trials;
    report.seed = seed;
    report.expected_generic_rank = std::min(2 * k, static_cast<std::size_t>(dprime) + 1);
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        const auto params = sample_params(field, k, rng);
        const std::size_t r = exact_rank(field, curve_jet_conditions(field, curve, params, 1));
        report.rank_histogram[r] += 1;
        report.max_rank_observed = std::max(report.max_rank_observed, r);
        if (r < report.expected_generic_rank) report.members_found += 1;
    }
    report.defect_flagged = report.members_found > 0;
    return report;
}

template <class F>
ProbeReport probe_emptiness_elliptic_odd(const F& field, const WeierstrassCurve<F>& curve,
                                         unsigned dprime, std::size_t k, int trials,
                                         std::uint64_t seed,
                                         std::optional<ECPoint<F>> base = std::nullopt) {
    if (trials < 1) throw InvalidInput("trials must be >= 1");
    if (dprime % 2 == 0) throw InvalidInput("elliptic-odd probe needs odd d'");
    ProbeReport report;
    report.target = "elliptic-odd";
    report.n = 2;
    report.d = dprime;
    report.k = k;
    report.trials = trials;
    report.seed = seed;
    report.expected_generic_rank = std::min(2 * k, static_cast<std::size_t>(3) * dprime);
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        std::vector<ECPoint<F>> pts;
        while (pts.size() < k) {
            ECPoint<F> p;
            if constexpr (F::is_prime_field) {
                p = ec_random_point(field, curve, rng);
            } else {
                if (!base) throw InvalidInput("rational-field mode needs a base point");
                p = ec_random_point(field, curve, rng, *base);
            }
            bool dup = false;
            for (const auto& q : pts)
                if (ec_equal(field, p, q)) dup = true;
            if (!dup) pts.push_back(p);
        }
        const std::size_t r = exact_rank(field, cubic_conditions_matrix(field, curve, pts, dprime));
        report.rank_histogram[r] += 1;
        report.max_rank_observed = std::max(report.max_rank_observed, r);
        if (r < report.expected_generic_rank) report.members_found += 1;
    }
    report.defect_flagged = report.members_found > 0;
    return report;
}

}  // namespace terracini
