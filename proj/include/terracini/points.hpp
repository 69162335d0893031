#pragma once

#include <cstddef>
#include <vector>

#include "terracini/errors.hpp"
#include "terracini/fields.hpp"
#include "terracini/rng.hpp"

namespace terracini {

// Point of P^n with homogeneous coordinates normalized so the first nonzero
// coordinate is 1; equality is coordinate-wise equality of the normal form.
template <class F>
struct ProjectivePoint {
    std::vector<typename F::Elem> coords;
};

template <class F>
ProjectivePoint<F> make_point(const F& field, std::vector<typename F::Elem> coords) {
    std::size_t first = coords.size();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!field.is_zero(coords[i])) {
            first = i;
            break;
        }
    }
    if (first == coords.size()) throw InvalidInput("projective point has all-zero coordinates");
    const typename F::Elem scale = field.inv(coords[first]);
    for (auto& c : coords) c = field.mul(c, scale);
    return ProjectivePoint<F>{std::move(coords)};
}

template <class F>
bool points_equal(const F& field, const ProjectivePoint<F>& a, const ProjectivePoint<F>& b) {
    if (a.coords.size() != b.coords.size()) return false;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        if (!field.eq(a.coords[i], b.coords[i])) return false;
    return true;
}

// Pairwise-distinct finite configuration in P^n.
template <class F>
struct PointSet {
    unsigned n = 0;
    std::vector<ProjectivePoint<F>> points;

    std::size_t k() const { return points.size(); }
};

template <class F>
PointSet<F> make_point_set(const F& field, unsigned n, std::vector<ProjectivePoint<F>> points) {
    if (points.empty()) throw InvalidInput("point set must be non-empty");
    for (const auto& p : points)
        if (p.coords.size() != n + 1) throw InvalidInput("point dimension mismatch");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points_equal(field, points[i], points[j]))
                throw InvalidInput("duplicate points in point set");
    return PointSet<F>{n, std::move(points)};
}

// Random point: integer coordinates in [-100, 100] over Q, uniform residues
// over F_p; redrawn if all-zero.
template <class F>
ProjectivePoint<F> sample_point(const F& field, unsigned n, Rng& rng, long bound = 100) {
    for (;;) {
        std::vector<typename F::Elem> coords;
        coords.reserve(n + 1);
        bool all_zero = true;
        for (unsigned i = 0; i <= n; ++i) {
            coords.push_back(field.random_coord(rng, bound));
            if (!field.is_zero(coords.back())) all_zero = false;
        }
        if (all_zero) continue;
        return make_point(field, std::move(coords));
    }
}

// Random pairwise-distinct configuration.
template <class F>
PointSet<F> sample_point_set(const F& field, unsigned n, std::size_t k, Rng& rng, long bound = 100) {
    std::vector<ProjectivePoint<F>> pts;
    while (pts.size() < k) {
        auto p = sample_point(field, n, rng, bound);
        bool dup = false;
        for (const auto& q : pts)
            if (points_equal(field, p, q)) dup = true;
        if (!dup) pts.push_back(std::move(p));
    }
    return PointSet<F>{n, std::move(pts)};
}

}  // namespace terracini
