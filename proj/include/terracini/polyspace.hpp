#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "terracini/errors.hpp"
#include "terracini/fields.hpp"
#include "terracini/matrix.hpp"

namespace terracini {

using ExponentVec = std::vector<unsigned>;

// C(n+d, n): dimension of degree-d forms in n+1 variables.
inline unsigned long long dim_forms(unsigned n, unsigned d) {
    unsigned long long r = 1;
    for (unsigned i = 1; i <= n; ++i) r = r * (d + i) / i;
    return r;
}

struct MonomialBasis {
    unsigned n = 0;
    unsigned d = 0;
    // Exponent vectors of length n+1 summing to d, graded-lex with x0
    // heaviest: first element is x0^d.
    std::vector<ExponentVec> monomials;
};

namespace detail {

inline void enumerate_monomials(unsigned vars_left, unsigned deg_left, ExponentVec& cur,
                                std::vector<ExponentVec>& out) {
    if (vars_left == 1) {
        cur.push_back(deg_left);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (unsigned e = deg_left + 1; e-- > 0;) {
        cur.push_back(e);
        enumerate_monomials(vars_left - 1, deg_left - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

inline MonomialBasis monomial_basis(unsigned n, unsigned d) {
    if (n < 1 || d < 1) throw InvalidInput("monomial_basis requires n >= 1, d >= 1");
    MonomialBasis b{n, d, {}};
    ExponentVec cur;
    detail::enumerate_monomials(n + 1, d, cur, b.monomials);
    return b;
}

inline void check_characteristic(std::uint64_t characteristic, unsigned d) {
    if (characteristic != 0 && d % characteristic == 0)
        throw UnsupportedCharacteristic("characteristic " + std::to_string(characteristic) +
                                        " divides degree " + std::to_string(d));
}

// Value of a monomial at a coordinate vector.
template <class F>
typename F::Elem eval_monomial(const F& field, const ExponentVec& mono,
                               const std::vector<typename F::Elem>& coords) {
    typename F::Elem v = field.one();
    for (std::size_t i = 0; i < mono.size(); ++i)
        if (mono[i] > 0) v = field.mul(v, field_pow(field, coords[i], mono[i]));
    return v;
}

// All first partials of a monomial at a point: the 2-fat-point conditions.
// The value condition is implied by the Euler relation, so it is not a
// separate row; that relation needs char ∤ d, checked by the caller.
template <class F>
std::vector<typename F::Elem> jet_row(const F& field, const ExponentVec& mono,
                                      const std::vector<typename F::Elem>& coords) {
    const std::size_t nv = mono.size();
    std::vector<typename F::Elem> out(nv, field.zero());
    for (std::size_t s = 0; s < nv; ++s) {
        if (mono[s] == 0) continue;
        typename F::Elem v = field.from_int(static_cast<long>(mono[s]));
        for (std::size_t i = 0; i < nv; ++i) {
            const unsigned e = mono[i] - (i == s ? 1u : 0u);
            if (e > 0) v = field.mul(v, field_pow(field, coords[i], e));
        }
        out[s] = v;
    }
    return out;
}

// Homogeneous binary form in (t, u); coeffs[i] multiplies t^{e-i} u^i.
template <class Elem>
struct BinaryForm {
    std::vector<Elem> coeffs;

    unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
};

template <class F>
BinaryForm<typename F::Elem> bf_constant(const F& field, const typename F::Elem& c) {
    return {{c}};
}

template <class F>
BinaryForm<typename F::Elem> bf_mul(const F& field, const BinaryForm<typename F::Elem>& a,
                                    const BinaryForm<typename F::Elem>& b) {
    BinaryForm<typename F::Elem> r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, field.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] = field.add(r.coeffs[i + j], field.mul(a.coeffs[i], b.coeffs[j]));
    return r;
}

template <class F>
BinaryForm<typename F::Elem> bf_pow(const F& field, const BinaryForm<typename F::Elem>& a,
                                    unsigned e) {
    BinaryForm<typename F::Elem> r = bf_constant(field, field.one());
    for (unsigned i = 0; i < e; ++i) r = bf_mul(field, r, a);
    return r;
}

template <class F>
typename F::Elem bf_eval(const F& field, const BinaryForm<typename F::Elem>& f,
                         const typename F::Elem& t, const typename F::Elem& u) {
    const unsigned e = f.degree();
    typename F::Elem v = field.zero();
    for (unsigned i = 0; i <= e; ++i) {
        typename F::Elem term = f.coeffs[i];
        term = field.mul(term, field_pow(field, t, e - i));
        term = field.mul(term, field_pow(field, u, i));
        v = field.add(v, term);
    }
    return v;
}

template <class F>
bool bf_is_zero(const F& field, const BinaryForm<typename F::Elem>& f) {
    for (const auto& c : f.coeffs)
        if (!field.is_zero(c)) return false;
    return true;
}

// Substitute the components of a parametrized rational curve into every
// basis monomial; each result is a binary form of degree e*d where e is the
// curve degree and d the basis degree.
template <class F>
std::vector<BinaryForm<typename F::Elem>> compose_monomials(
    const F& field, const MonomialBasis& basis,
    const std::vector<BinaryForm<typename F::Elem>>& components) {
    if (components.size() != basis.n + 1)
        throw InvalidInput("curve ambient dimension does not match basis");
    std::vector<BinaryForm<typename F::Elem>> out;
    out.reserve(basis.monomials.size());
    for (const auto& mono : basis.monomials) {
        BinaryForm<typename F::Elem> f = bf_constant(field, field.one());
        for (std::size_t i = 0; i < components.size(); ++i)
            if (mono[i] > 0) f = bf_mul(field, f, bf_pow(field, components[i], mono[i]));
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace terracini
