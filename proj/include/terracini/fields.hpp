#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "terracini/errors.hpp"
#include "terracini/rng.hpp"

namespace terracini {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, p);
        base = mulmod_u64(base, base, p);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace detail

// The rational numbers, backed by GMP. Elements are always canonical
// (lowest terms, positive denominator).
class RationalField {
public:
    using Elem = mpq_class;

    static constexpr bool is_prime_field = false;

    std::uint64_t characteristic() const { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }

    // Accepts decimal integers and "a/b" fractions.
    Elem from_string(const std::string& s) const {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw InvalidInput("bad rational literal: " + s);
        q.canonicalize();
        if (q.get_den() == 0) throw InvalidInput("zero denominator: " + s);
        return q;
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw InvalidInput("inverse of zero");
        return Elem(1) / a;
    }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string to_string(const Elem& a) const { return a.get_str(); }

    // Random integer coordinate in [-bound, bound].
    Elem random_coord(Rng& rng, long bound = 100) const {
        return Elem(static_cast<long>(rng.int_in(-bound, bound)));
    }
};

// F_p for an odd prime p < 2^62. Elements are residues in [0, p).
class PrimeField {
public:
    using Elem = std::uint64_t;

    static constexpr bool is_prime_field = true;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (1ULL << 62)) throw InvalidInput("modulus too large");
        if (!detail::is_prime_u64(p)) throw InvalidInput("modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t characteristic() const { return p_; }
    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }

    Elem from_int(long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }

    // Accepts decimal integers and "a/b" fractions; reduces mod p.
    Elem from_string(const std::string& s) const {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw InvalidInput("bad literal: " + s);
        q.canonicalize();
        return reduce(q);
    }

    // Rational -> F_p; throws if p divides the denominator.
    Elem reduce(const mpq_class& q) const {
        mpz_class p(static_cast<unsigned long>(p_));
        mpz_class den_mod = q.get_den() % p;
        if (den_mod == 0)
            throw ReductionError("denominator divisible by p=" + std::to_string(p_));
        mpz_class num_mod = q.get_num() % p;
        if (num_mod < 0) num_mod += p;
        Elem num = static_cast<Elem>(num_mod.get_ui());
        Elem den = static_cast<Elem>(mpz_class(den_mod < 0 ? den_mod + p : den_mod).get_ui());
        return mul(num, inv(den));
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return detail::mulmod_u64(a, b, p_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw InvalidInput("inverse of zero");
        return detail::powmod_u64(a, p_ - 2, p_);
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::string to_string(Elem a) const { return std::to_string(a); }

    Elem random_coord(Rng& rng, long /*bound*/ = 100) const { return rng.below(p_); }

    // Tonelli-Shanks square root; empty when a is a non-residue.
    std::optional<Elem> sqrt(Elem a) const {
        if (a == 0) return Elem(0);
        if (detail::powmod_u64(a, (p_ - 1) / 2, p_) != 1) return std::nullopt;
        if (p_ % 4 == 3) return detail::powmod_u64(a, (p_ + 1) / 4, p_);
        std::uint64_t q = p_ - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        // deterministic scan for a non-residue
        Elem z = 2;
        while (detail::powmod_u64(z, (p_ - 1) / 2, p_) != p_ - 1) ++z;
        Elem c = detail::powmod_u64(z, q, p_);
        Elem x = detail::powmod_u64(a, (q + 1) / 2, p_);
        Elem t = detail::powmod_u64(a, q, p_);
        int m = s;
        while (t != 1) {
            Elem tt = t;
            int i = 0;
            while (tt != 1) {
                tt = mul(tt, tt);
                ++i;
            }
            Elem b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mul(b, b);
            x = mul(x, b);
            c = mul(b, b);
            t = mul(t, c);
            m = i;
        }
        return x;
    }

private:
    std::uint64_t p_;
};

// Generic exponentiation by squaring over a field object.
template <class F>
typename F::Elem field_pow(const F& field, const typename F::Elem& base, unsigned long exp) {
    typename F::Elem r = field.one();
    typename F::Elem b = base;
    while (exp) {
        if (exp & 1) r = field.mul(r, b);
        b = field.mul(b, b);
        exp >>= 1;
    }
    return r;
}

}  // namespace terracini
