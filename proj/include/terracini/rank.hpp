#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "terracini/fields.hpp"
#include "terracini/matrix.hpp"
#include "terracini/rng.hpp"

namespace terracini {

enum class RankMethod { fraction_free, modular, modular_multi_prime };

inline std::string rank_method_name(RankMethod m) {
    switch (m) {
        case RankMethod::fraction_free: return "fraction-free";
        case RankMethod::modular: return "modular";
        case RankMethod::modular_multi_prime: return "modular-multi-prime";
    }
    return "?";
}

struct RankStrategy {
    RankMethod method = RankMethod::fraction_free;
    std::uint64_t modulus = 0;  // for RankMethod::modular
    int prime_count = 3;
    int prime_bits = 31;
    std::uint64_t seed = 0;
    bool accept_monte_carlo = true;
    // Values whose prime factors must not be used as moduli (e.g. the form
    // degree d, to keep the Euler relation valid mod p).
    std::vector<std::uint64_t> forbidden_char_divisors;

    static RankStrategy fraction_free() { return RankStrategy{}; }
    static RankStrategy modular(std::uint64_t p) {
        RankStrategy s;
        s.method = RankMethod::modular;
        s.modulus = p;
        return s;
    }
    static RankStrategy multi_prime(int count, int bits, std::uint64_t seed) {
        RankStrategy s;
        s.method = RankMethod::modular_multi_prime;
        s.prime_count = count;
        s.prime_bits = bits;
        s.seed = seed;
        return s;
    }
};

struct RankReport {
    std::size_t rank = 0;
    RankMethod method = RankMethod::fraction_free;
    bool certified = false;
    std::vector<std::uint64_t> primes_used;
};

// Clear denominators row by row; the resulting integer matrix has the same
// rank over Q.
inline Matrix<mpz_class> clear_denominators(const Matrix<mpq_class>& m) {
    Matrix<mpz_class> z(m.rows(), m.cols(), mpz_class(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_class den = m(i, j).get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
            l = l / g * den;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpq_class scaled = m(i, j) * mpq_class(l);
            scaled.canonicalize();
            z(i, j) = scaled.get_num();
        }
    }
    return z;
}

// Fraction-free (Bareiss) elimination over the integers. Exact divisions
// only; intermediate entries are minors of the input. Pivot: first nonzero
// in column order, for determinism.
inline std::size_t bareiss_rank(Matrix<mpz_class> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    mpz_class prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        m.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = m(r, col) * m(i, j) - m(i, col) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, col) = 0;
        }
        prev = m(r, col);
        ++r;
    }
    return r;
}

// Exact rank over Q.
inline std::size_t rank_exact(const Matrix<mpq_class>& m) {
    return bareiss_rank(clear_denominators(m));
}

// Plain Gaussian elimination over F_p.
inline std::size_t gauss_rank(const PrimeField& field, Matrix<std::uint64_t> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && m(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        m.swap_rows(r, piv);
        const std::uint64_t pinv = field.inv(m(r, col));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m(i, col) == 0) continue;
            const std::uint64_t f = field.mul(m(i, col), pinv);
            for (std::size_t j = col; j < cols; ++j)
                m(i, j) = field.sub(m(i, j), field.mul(f, m(r, j)));
        }
        ++r;
    }
    return r;
}

inline std::size_t rank_modular(const PrimeField& field, const Matrix<std::uint64_t>& m) {
    return gauss_rank(field, m);
}

// Entrywise reduction mod p; throws ReductionError when p divides a
// denominator.
inline Matrix<std::uint64_t> reduce_mod(const PrimeField& field, const Matrix<mpq_class>& m) {
    Matrix<std::uint64_t> r(m.rows(), m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = field.reduce(m(i, j));
    return r;
}

namespace detail {

// Draws a random prime of the requested bit size, avoiding primes that
// divide any forbidden value. Denominator clashes are handled by the caller
// (reduce_mod throws and we redraw).
inline std::uint64_t random_prime(Rng& rng, int bits, const std::vector<std::uint64_t>& forbidden) {
    const std::uint64_t lo = 1ULL << (bits - 1);
    for (;;) {
        std::uint64_t cand = lo + rng.below(lo);
        cand |= 1;
        if (!is_prime_u64(cand)) continue;
        bool bad = false;
        for (std::uint64_t v : forbidden)
            if (v != 0 && v % cand == 0) bad = true;
        if (!bad) return cand;
    }
}

}  // namespace detail

// Strategy dispatch for rational matrices. Multi-prime takes the maximum
// rank over the sampled primes (each modular rank is a lower bound on the
// rank over Q); certification requires full agreement plus the caller's
// Monte Carlo policy.
inline RankReport rank(const Matrix<mpq_class>& m, const RankStrategy& strategy) {
    RankReport report;
    report.method = strategy.method;
    switch (strategy.method) {
        case RankMethod::fraction_free:
            report.rank = rank_exact(m);
            report.certified = true;
            break;
        case RankMethod::modular: {
            PrimeField field(strategy.modulus);
            report.rank = rank_modular(field, reduce_mod(field, m));
            report.primes_used.push_back(strategy.modulus);
            report.certified = false;
            break;
        }
        case RankMethod::modular_multi_prime: {
            Rng rng(strategy.seed);
            std::vector<std::size_t> ranks;
            while (static_cast<int>(ranks.size()) < strategy.prime_count) {
                std::uint64_t p =
                    detail::random_prime(rng, strategy.prime_bits, strategy.forbidden_char_divisors);
                if (std::find(report.primes_used.begin(), report.primes_used.end(), p) !=
                    report.primes_used.end())
                    continue;
                PrimeField field(p);
                try {
                    ranks.push_back(rank_modular(field, reduce_mod(field, m)));
                } catch (const ReductionError&) {
                    continue;  // p divides a denominator; redraw
                }
                report.primes_used.push_back(p);
            }
            report.rank = *std::max_element(ranks.begin(), ranks.end());
            const bool agree =
                std::all_of(ranks.begin(), ranks.end(), [&](std::size_t r) { return r == report.rank; });
            report.certified = agree && strategy.accept_monte_carlo;
            break;
        }
    }
    return report;
}

// Exact rank dispatch usable from generic (field-templated) code.
inline std::size_t exact_rank(const RationalField&, const Matrix<mpq_class>& m) {
    return rank_exact(m);
}
inline std::size_t exact_rank(const PrimeField& field, const Matrix<std::uint64_t>& m) {
    return gauss_rank(field, m);
}

}  // namespace terracini
