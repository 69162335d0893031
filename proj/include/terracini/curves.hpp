#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "terracini/points.hpp"
#include "terracini/polyspace.hpp"
#include "terracini/rank.hpp"

namespace terracini {

// Parametrized rational curve in P^N: N+1 binary forms of a common degree e.
template <class F>
struct RationalCurve {
    unsigned ambient_n = 0;  // N
    unsigned degree = 0;     // e
    std::vector<BinaryForm<typename F::Elem>> components;
};

template <class F>
RationalCurve<F> make_rational_curve(const F& field,
                                     std::vector<BinaryForm<typename F::Elem>> components) {
    if (components.size() < 2) throw InvalidInput("curve needs at least 2 components");
    const unsigned e = components[0].degree();
    bool any_nonzero = false;
    for (const auto& c : components) {
        if (c.degree() != e) throw InvalidInput("curve components must share one degree");
        if (!bf_is_zero(field, c)) any_nonzero = true;
    }
    if (!any_nonzero) throw InvalidInput("curve components are all zero");
    return RationalCurve<F>{static_cast<unsigned>(components.size() - 1), e, std::move(components)};
}

// (t^d', t^{d'-1}u, ..., u^d'): the degree-d' rational normal curve.
template <class F>
RationalCurve<F> rational_normal_curve(const F& field, unsigned dprime) {
    if (dprime < 1) throw InvalidInput("rational normal curve needs degree >= 1");
    std::vector<BinaryForm<typename F::Elem>> comps;
    for (unsigned i = 0; i <= dprime; ++i) {
        BinaryForm<typename F::Elem> f;
        f.coeffs.assign(dprime + 1, field.zero());
        f.coeffs[i] = field.one();
        comps.push_back(std::move(f));
    }
    return RationalCurve<F>{dprime, dprime, std::move(comps)};
}

// The line (t, u, 0, ..., 0) in P^n.
template <class F>
RationalCurve<F> line_curve(const F& field, unsigned n) {
    if (n < 1) throw InvalidInput("line needs ambient dimension >= 1");
    std::vector<BinaryForm<typename F::Elem>> comps;
    for (unsigned i = 0; i <= n; ++i) {
        BinaryForm<typename F::Elem> f;
        f.coeffs.assign(2, field.zero());
        if (i == 0) f.coeffs[0] = field.one();
        if (i == 1) f.coeffs[1] = field.one();
        comps.push_back(std::move(f));
    }
    return RationalCurve<F>{n, 1, std::move(comps)};
}

// Parameter of P^1 in normal form: u = 1 for affine parameters, (1, 0) for
// the point at infinity.
template <class F>
struct CurveParam {
    typename F::Elem t, u;
};

template <class F>
CurveParam<F> make_param(const F& field, typename F::Elem t, typename F::Elem u) {
    if (field.is_zero(u)) {
        if (field.is_zero(t)) throw InvalidInput("(0,0) is not a point of P^1");
        return {field.one(), field.zero()};
    }
    return {field.mul(t, field.inv(u)), field.one()};
}

template <class F>
bool params_equal(const F& field, const CurveParam<F>& a, const CurveParam<F>& b) {
    return field.eq(a.t, b.t) && field.eq(a.u, b.u);
}

template <class F>
ProjectivePoint<F> point_on_curve(const F& field, const RationalCurve<F>& curve,
                                  const CurveParam<F>& p) {
    std::vector<typename F::Elem> coords;
    coords.reserve(curve.components.size());
    for (const auto& c : curve.components) coords.push_back(bf_eval(field, c, p.t, p.u));
    for (const auto& c : coords)
        if (!field.is_zero(c)) return make_point(field, std::move(coords));
    throw InvalidInput("all curve components vanish at the given parameter");
}

// Coefficient matrix of the composed monomials: rows = degree-m monomials
// of P^N, columns = binary monomials of degree e*m.
template <class F>
Matrix<typename F::Elem> restriction_matrix(const F& field, const RationalCurve<F>& curve,
                                            unsigned m) {
    const MonomialBasis basis = monomial_basis(curve.ambient_n, m);
    const auto composed = compose_monomials(field, basis, curve.components);
    const std::size_t cols = curve.degree * m + 1;
    Matrix<typename F::Elem> r(composed.size(), cols, field.zero());
    for (std::size_t i = 0; i < composed.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) r(i, j) = composed[i].coeffs[j];
    return r;
}

// Dimension of the image of degree-m forms restricted to the curve, inside
// binary forms of degree e*m. Equals e*m+1 exactly when the restricted
// series is complete.
template <class F>
std::size_t restriction_rank(const F& field, const RationalCurve<F>& curve, unsigned m) {
    if (m < 1) throw InvalidInput("degree must be >= 1");
    return exact_rank(field, restriction_matrix(field, curve, m));
}

// 2-jet conditions of k curve parameters on the restricted degree-m series,
// written in the binary basis of degree e*m: row 2i is the value row at
// parameter i, row 2i+1 the derivative in the affine chart containing it.
// Requires the restricted series to be complete (restriction_rank = e*m+1),
// which makes the binary basis a basis of the restricted system; rank <
// 2k then certifies that the restricted double-point scheme is dependent.
template <class F>
Matrix<typename F::Elem> curve_jet_conditions(const F& field, const RationalCurve<F>& curve,
                                              const std::vector<CurveParam<F>>& params,
                                              unsigned m) {
    if (m < 1) throw InvalidInput("degree must be >= 1");
    for (std::size_t i = 0; i < params.size(); ++i)
        for (std::size_t j = i + 1; j < params.size(); ++j)
            if (params_equal(field, params[i], params[j]))
                throw InvalidInput("duplicate curve parameters");
    for (const auto& p : params) point_on_curve(field, curve, p);  // rejects base points
    const unsigned big_e = curve.degree * m;
    if (restriction_rank(field, curve, m) != big_e + 1)
        throw InvalidInput("restricted series is incomplete; curve-level jets are not computed");
    Matrix<typename F::Elem> mat(2 * params.size(), big_e + 1, field.zero());
    for (std::size_t i = 0; i < params.size(); ++i) {
        const auto& p = params[i];
        const bool affine = !field.is_zero(p.u);
        for (unsigned j = 0; j <= big_e; ++j) {
            // basis monomial t^{E-j} u^j
            const auto tv = field_pow(field, p.t, big_e - j);
            const auto uv = field_pow(field, p.u, j);
            mat(2 * i, j) = field.mul(tv, uv);
            if (affine) {  // d/dt in the chart u = 1
                if (big_e - j > 0)
                    mat(2 * i + 1, j) =
                        field.mul(field.from_int(static_cast<long>(big_e - j)),
                                  field.mul(field_pow(field, p.t, big_e - j - 1), uv));
            } else {  // d/du in the chart t = 1
                if (j > 0)
                    mat(2 * i + 1, j) =
                        field.mul(field.from_int(static_cast<long>(j)),
                                  field.mul(tv, field_pow(field, p.u, j - 1)));
            }
        }
    }
    return mat;
}

// k distinct affine parameters with small integer (resp. uniform residue)
// values.
template <class F>
std::vector<CurveParam<F>> sample_params(const F& field, std::size_t k, Rng& rng, long bound = 100) {
    std::vector<CurveParam<F>> out;
    while (out.size() < k) {
        CurveParam<F> p{field.random_coord(rng, bound), field.one()};
        bool dup = false;
        for (const auto& q : out)
            if (params_equal(field, p, q)) dup = true;
        if (!dup) out.push_back(p);
    }
    return out;
}

}  // namespace terracini
