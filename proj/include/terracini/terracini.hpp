#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "terracini/matrix.hpp"
#include "terracini/points.hpp"
#include "terracini/polyspace.hpp"
#include "terracini/rank.hpp"

namespace terracini {

// 2-jet conditions matrix of a point set under the degree-d Veronese
// embedding: k(n+1) rows (n+1 partials per point), C(n+d,n) columns.
template <class F>
struct TerraciniMatrix {
    unsigned n = 0, d = 0;
    std::size_t k = 0;
    Matrix<typename F::Elem> mat;
};

template <class F>
TerraciniMatrix<F> terracini_matrix(const F& field, const PointSet<F>& set, unsigned d) {
    if (d < 1) throw InvalidInput("degree must be >= 1");
    check_characteristic(field.characteristic(), d);
    const unsigned n = set.n;
    const MonomialBasis basis = monomial_basis(n, d);
    const std::size_t k = set.k();
    TerraciniMatrix<F> t;
    t.n = n;
    t.d = d;
    t.k = k;
    t.mat = Matrix<typename F::Elem>(k * (n + 1), basis.monomials.size(), field.zero());
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < basis.monomials.size(); ++j) {
            const auto jet = jet_row(field, basis.monomials[j], set.points[i].coords);
            for (unsigned s = 0; s <= n; ++s) t.mat(i * (n + 1) + s, j) = jet[s];
        }
    }
    return t;
}

// Terracini-locus membership verdict derived from the rank of the jet
// conditions matrix: h0 > 0 iff rank < ambient dimension, h1 > 0 iff
// rank < number of conditions, member iff both.
struct MembershipVerdict {
    std::size_t rank = 0;
    std::size_t conditions = 0;
    std::size_t ambient_dim = 0;
    bool h0_positive = false;
    bool h1_positive = false;
    bool member = false;
    bool certified = false;
    RankMethod method = RankMethod::fraction_free;
    std::uint64_t characteristic = 0;  // 0 = statement over char-0 closed fields
};

inline MembershipVerdict make_verdict(std::size_t rank, std::size_t conditions,
                                      std::size_t ambient_dim, bool certified, RankMethod method,
                                      std::uint64_t characteristic) {
    MembershipVerdict v;
    v.rank = rank;
    v.conditions = conditions;
    v.ambient_dim = ambient_dim;
    v.h0_positive = rank < ambient_dim;
    v.h1_positive = rank < conditions;
    v.member = v.h0_positive && v.h1_positive;
    v.certified = certified;
    v.method = method;
    v.characteristic = characteristic;
    return v;
}

inline MembershipVerdict membership(const RationalField& field, const PointSet<RationalField>& set,
                                    unsigned d, RankStrategy strategy = RankStrategy::fraction_free()) {
    auto t = terracini_matrix(field, set, d);
    strategy.forbidden_char_divisors.push_back(d);
    const RankReport report = rank(t.mat, strategy);
    return make_verdict(report.rank, t.k * (t.n + 1), t.mat.cols(), report.certified, report.method, 0);
}

inline MembershipVerdict membership(const PrimeField& field, const PointSet<PrimeField>& set,
                                    unsigned d, RankStrategy /*strategy*/ = RankStrategy::fraction_free()) {
    auto t = terracini_matrix(field, set, d);
    const std::size_t r = gauss_rank(field, t.mat);
    // Rank over F_p equals rank over its algebraic closure, so this verdict
    // is exact for the labeled characteristic.
    return make_verdict(r, t.k * (t.n + 1), t.mat.cols(), true, RankMethod::modular,
                        field.characteristic());
}

// Sampling summary for general-position rank experiments.
struct ProbeReport {
    std::string target;
    unsigned n = 0, d = 0;
    std::size_t k = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::map<std::size_t, int> rank_histogram;
    std::size_t expected_generic_rank = 0;
    std::size_t max_rank_observed = 0;
    bool defect_flagged = false;
    int members_found = 0;
    // Sampling corroborates but never proves; every report says so.
    std::string evidence = "statistical evidence only; sampling cannot certify emptiness";
};

// Desk-scale general-position check: samples k random points per trial and
// records the rank of the Terracini matrix. Flags (n,d,k) as defective when
// even the best draw misses the expected generic rank min(k(n+1), C(n+d,n)).
template <class F>
ProbeReport ah_probe(const F& field, unsigned n, unsigned d, std::size_t k, int trials,
                     std::uint64_t seed, RankStrategy strategy = RankStrategy::fraction_free()) {
    if (trials < 1) throw InvalidInput("trials must be >= 1");
    ProbeReport report;
    report.target = "ah";
    report.n = n;
    report.d = d;
    report.k = k;
    report.trials = trials;
    report.seed = seed;
    report.expected_generic_rank =
        std::min<std::size_t>(k * (n + 1), static_cast<std::size_t>(dim_forms(n, d)));
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        const PointSet<F> set = sample_point_set(field, n, k, rng);
        std::size_t r;
        if constexpr (F::is_prime_field) {
            r = membership(field, set, d).rank;
        } else {
            RankStrategy s = strategy;
            s.seed = derive_seed(seed, 0x517e ^ static_cast<std::uint64_t>(trial));
            r = membership(field, set, d, s).rank;
        }
        report.rank_histogram[r] += 1;
        report.max_rank_observed = std::max(report.max_rank_observed, r);
        const auto ambient = static_cast<std::size_t>(dim_forms(n, d));
        if (r < std::min(k * (n + 1), ambient) && r < ambient && r < k * (n + 1))
            report.members_found += 1;
    }
    report.defect_flagged = report.max_rank_observed < report.expected_generic_rank;
    return report;
}

}  // namespace terracini
