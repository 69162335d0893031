#pragma once

#include <cstddef>
#include <vector>

#include "terracini/points.hpp"
#include "terracini/polyspace.hpp"
#include "terracini/rank.hpp"

namespace terracini {

// Smooth plane cubic in short Weierstrass form y^2 z = x^3 + a x z^2 + b z^3
// over a field of characteristic not 2 or 3.
template <class F>
struct WeierstrassCurve {
    typename F::Elem a, b;
};

template <class F>
WeierstrassCurve<F> make_weierstrass(const F& field, typename F::Elem a, typename F::Elem b) {
    const std::uint64_t q = field.characteristic();
    if (q == 2 || q == 3)
        throw UnsupportedCharacteristic("short Weierstrass form needs characteristic not in {2,3}");
    // discriminant condition 4a^3 + 27b^2 != 0
    const auto disc = field.add(
        field.mul(field.from_int(4), field.mul(a, field.mul(a, a))),
        field.mul(field.from_int(27), field.mul(b, b)));
    if (field.is_zero(disc)) throw InvalidInput("singular cubic: 4a^3 + 27b^2 = 0");
    return WeierstrassCurve<F>{a, b};
}

// O (at infinity) or an affine point (x, y) with y^2 = x^3 + a x + b.
template <class F>
struct ECPoint {
    bool inf = true;
    typename F::Elem x{}, y{};

    static ECPoint infinity() { return ECPoint{}; }
    static ECPoint affine(typename F::Elem x, typename F::Elem y) { return ECPoint{false, x, y}; }
};

template <class F>
bool ec_on_curve(const F& field, const WeierstrassCurve<F>& c, const ECPoint<F>& p) {
    if (p.inf) return true;
    const auto lhs = field.mul(p.y, p.y);
    const auto rhs = field.add(field.mul(p.x, field.mul(p.x, p.x)),
                               field.add(field.mul(c.a, p.x), c.b));
    return field.eq(lhs, rhs);
}

template <class F>
bool ec_equal(const F& field, const ECPoint<F>& p, const ECPoint<F>& q) {
    if (p.inf || q.inf) return p.inf == q.inf;
    return field.eq(p.x, q.x) && field.eq(p.y, q.y);
}

template <class F>
ECPoint<F> ec_neg(const F& field, const ECPoint<F>& p) {
    if (p.inf) return p;
    return ECPoint<F>::affine(p.x, field.neg(p.y));
}

// Chord-tangent addition with identity O.
template <class F>
ECPoint<F> ec_add(const F& field, const WeierstrassCurve<F>& c, const ECPoint<F>& p,
                  const ECPoint<F>& q) {
    if (p.inf) return q;
    if (q.inf) return p;
    typename F::Elem slope;
    if (field.eq(p.x, q.x)) {
        if (!field.eq(p.y, q.y) || field.is_zero(p.y)) return ECPoint<F>::infinity();
        // tangent: (3x^2 + a) / 2y
        slope = field.mul(
            field.add(field.mul(field.from_int(3), field.mul(p.x, p.x)), c.a),
            field.inv(field.mul(field.from_int(2), p.y)));
    } else {
        slope = field.mul(field.sub(q.y, p.y), field.inv(field.sub(q.x, p.x)));
    }
    const auto x3 = field.sub(field.sub(field.mul(slope, slope), p.x), q.x);
    const auto y3 = field.sub(field.mul(slope, field.sub(p.x, x3)), p.y);
    return ECPoint<F>::affine(x3, y3);
}

template <class F>
ECPoint<F> ec_scalar_mul(const F& field, const WeierstrassCurve<F>& c, long k, ECPoint<F> p) {
    if (k < 0) {
        p = ec_neg(field, p);
        k = -k;
    }
    ECPoint<F> r = ECPoint<F>::infinity();
    while (k) {
        if (k & 1) r = ec_add(field, c, r, p);
        p = ec_add(field, c, p, p);
        k >>= 1;
    }
    return r;
}

template <class F>
bool ec_is_two_torsion(const F& field, const ECPoint<F>& t) {
    return t.inf || field.is_zero(t.y);
}

// Completes a (k-1)-point prefix to a set whose group-law sum is the given
// 2-torsion point T, so that 2S is linearly equivalent to a multiple of the
// hyperplane class. The caller resamples the prefix when the result
// collides with it.
template <class F>
ECPoint<F> ec_solve_last_point(const F& field, const WeierstrassCurve<F>& c,
                               const std::vector<ECPoint<F>>& prefix, const ECPoint<F>& target) {
    if (!ec_is_two_torsion(field, target))
        throw InvalidInput("target must be a 2-torsion point (T = O or y(T) = 0)");
    ECPoint<F> sum = ECPoint<F>::infinity();
    for (const auto& p : prefix) {
        if (!ec_on_curve(field, c, p)) throw InvalidInput("prefix point is not on the curve");
        sum = ec_add(field, c, sum, p);
    }
    return ec_add(field, c, target, ec_neg(field, sum));
}

// Random affine point over F_p: random x until x^3 + ax + b is a square.
inline ECPoint<PrimeField> ec_random_point(const PrimeField& field,
                                           const WeierstrassCurve<PrimeField>& c, Rng& rng) {
    for (;;) {
        const auto x = field.random_coord(rng);
        const auto rhs = field.add(field.mul(x, field.mul(x, x)),
                                   field.add(field.mul(c.a, x), c.b));
        const auto root = field.sqrt(rhs);
        if (!root) continue;
        auto y = *root;
        if (!field.is_zero(y) && rng.below(2)) y = field.neg(y);
        return ECPoint<PrimeField>::affine(x, y);
    }
}

// Random point over Q: a random scalar multiple of a user-supplied base
// point. Small scalars only: heights grow quadratically in the scalar, so
// large multiples of an infinite-order point are astronomically tall.
inline ECPoint<RationalField> ec_random_point(const RationalField& field,
                                              const WeierstrassCurve<RationalField>& c, Rng& rng,
                                              const ECPoint<RationalField>& base) {
    return ec_scalar_mul(field, c, static_cast<long>(1 + rng.below(12)), base);
}

// Homogeneous coordinates of an EC point in P^2: (x : y : 1), O = (0 : 1 : 0).
template <class F>
ProjectivePoint<F> ec_to_projective(const F& field, const ECPoint<F>& p) {
    if (p.inf) return make_point(field, {field.zero(), field.one(), field.zero()});
    return make_point(field, {p.x, p.y, field.one()});
}

// Gradient of F = y^2 z - x^3 - a x z^2 - b z^3 at a projective point.
template <class F>
std::vector<typename F::Elem> cubic_gradient(const F& field, const WeierstrassCurve<F>& c,
                                             const ProjectivePoint<F>& p) {
    const auto& x = p.coords[0];
    const auto& y = p.coords[1];
    const auto& z = p.coords[2];
    const auto gx = field.neg(field.add(field.mul(field.from_int(3), field.mul(x, x)),
                                        field.mul(c.a, field.mul(z, z))));
    const auto gy = field.mul(field.from_int(2), field.mul(y, z));
    const auto gz = field.sub(field.mul(y, y),
                              field.add(field.mul(field.from_int(2), field.mul(c.a, field.mul(x, z))),
                                        field.mul(field.from_int(3), field.mul(c.b, field.mul(z, z)))));
    return {gx, gy, gz};
}

// A tangent direction at a smooth point of the cubic: a vector t with
// grad F(p) . t = 0 and t not proportional to p; (p, t) spans the tangent
// line.
template <class F>
std::vector<typename F::Elem> cubic_tangent_direction(const F& field, const WeierstrassCurve<F>& c,
                                                      const ProjectivePoint<F>& p) {
    const auto g = cubic_gradient(field, c, p);
    std::size_t piv = 3;
    for (std::size_t i = 0; i < 3; ++i)
        if (!field.is_zero(g[i])) {
            piv = i;
            break;
        }
    if (piv == 3) throw InvalidInput("zero gradient: point is singular or off the curve");
    // Kernel of g is spanned by { g[piv] e_i - g[i] e_piv : i != piv }; pick
    // one independent of p.
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == piv) continue;
        std::vector<typename F::Elem> t(3, field.zero());
        t[i] = g[piv];
        t[piv] = field.neg(g[i]);
        // proportional to p iff the 2x2 minors with p all vanish
        bool proportional = true;
        for (std::size_t r = 0; r < 3 && proportional; ++r)
            for (std::size_t s = r + 1; s < 3; ++s) {
                const auto minor = field.sub(field.mul(p.coords[r], t[s]),
                                             field.mul(p.coords[s], t[r]));
                if (!field.is_zero(minor)) {
                    proportional = false;
                    break;
                }
            }
        if (!proportional) return t;
    }
    throw InvalidInput("no tangent direction found");  // unreachable on a smooth cubic
}

// Conditions imposed by the double points 2S on degree-d' forms of P^2:
// per point, the evaluation row of every degree-d' monomial and its
// derivative along the tangent direction of the cubic. Forms divisible by
// the cubic satisfy both conditions identically, so the rank agrees with
// the rank of the conditions on the complete system H^0(O_C(d')) of
// dimension 3d'.
template <class F>
Matrix<typename F::Elem> cubic_conditions_matrix(const F& field, const WeierstrassCurve<F>& c,
                                                 const std::vector<ECPoint<F>>& points,
                                                 unsigned dprime) {
    if (dprime < 1) throw InvalidInput("degree must be >= 1");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!ec_on_curve(field, c, points[i])) throw InvalidInput("point is not on the curve");
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (ec_equal(field, points[i], points[j])) throw InvalidInput("duplicate curve points");
    }
    const MonomialBasis basis = monomial_basis(2, dprime);
    Matrix<typename F::Elem> mat(2 * points.size(), basis.monomials.size(), field.zero());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto p = ec_to_projective(field, points[i]);
        const auto dir = cubic_tangent_direction(field, c, p);
        for (std::size_t j = 0; j < basis.monomials.size(); ++j) {
            mat(2 * i, j) = eval_monomial(field, basis.monomials[j], p.coords);
            const auto jet = jet_row(field, basis.monomials[j], p.coords);
            typename F::Elem dv = field.zero();
            for (std::size_t s = 0; s < 3; ++s) dv = field.add(dv, field.mul(dir[s], jet[s]));
            mat(2 * i + 1, j) = dv;
        }
    }
    return mat;
}

}  // namespace terracini
