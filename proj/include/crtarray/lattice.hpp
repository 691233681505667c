#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "embedding.hpp"
#include "intmath.hpp"
#include "ring.hpp"

namespace crtarray {

// Point of the ambient rank-2 module, written in the basis {1, q}.
struct Coord {
    int64_t a = 0;
    int64_t b = 0;
};
using LatticePoint = Coord;

inline bool operator==(const Coord& x, const Coord& y) { return x.a == y.a && x.b == y.b; }
inline bool operator!=(const Coord& x, const Coord& y) { return !(x == y); }
inline bool operator<(const Coord& x, const Coord& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
}
inline Coord operator+(const Coord& x, const Coord& y) {
    return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}
inline Coord operator-(const Coord& x, const Coord& y) {
    return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}
inline Coord operator-(const Coord& x) { return {checked_neg(x.a), checked_neg(x.b)}; }
inline std::ostream& operator<<(std::ostream& os, const Coord& x) {
    return os << '(' << x.a << ',' << x.b << ')';
}

inline Coord apply(const IntMat2& m, const Coord& x) {
    return {checked_add(checked_mul(m.a, x.a), checked_mul(m.b, x.b)),
            checked_add(checked_mul(m.c, x.a), checked_mul(m.d, x.b))};
}

// Squared Euclidean length of the embedded point, which is exactly the value
// of the ring's norm form.
inline int64_t norm_sq(const RingSpec& ring, const Coord& x) {
    return norm(QuadInt{ring, x.a, x.b});
}

inline std::pair<Surd, Surd> embed_exact(const RingSpec& ring, const Coord& x) {
    ExactMat2 g = generator_matrix(ring);
    Surd xa{Rational(x.a)};
    Surd xb{Rational(x.b)};
    return {g.a * xa + g.b * xb, g.c * xa + g.d * xb};
}

inline std::pair<double, double> embed_xy(const RingSpec& ring, const Coord& x) {
    auto [ex, ey] = embed_exact(ring, x);
    return {ex.to_double(), ey.to_double()};
}

// Finite-index sublattice of the ring, generated by the basis columns.
struct Lattice {
    RingSpec ring;
    IntMat2 basis;
};

inline Lattice full_lattice(const RingSpec& ring) { return {ring, IntMat2::identity()}; }

// Lattice of the principal ideal (g). Its basis columns g and g*q inherit
// Lagrange reduction from {1, q}, which reduce_mod below relies on.
inline Lattice ideal_lattice(const QuadInt& g) {
    if (g.is_zero()) throw std::invalid_argument("ideal_lattice: zero generator");
    return {g.ring, matrix_rep(g)};
}

inline Lattice scaled_lattice(const Lattice& lat, int64_t k) {
    if (k == 0) throw std::invalid_argument("scaled_lattice: zero scale");
    return {lat.ring, lat.basis.scaled(k)};
}

inline bool contains(const Lattice& lat, const Coord& x) {
    int64_t det = lat.basis.det();
    IntMat2 adj = lat.basis.adjugate();
    int64_t u = checked_add(checked_mul(adj.a, x.a), checked_mul(adj.b, x.b));
    int64_t v = checked_add(checked_mul(adj.c, x.a), checked_mul(adj.d, x.b));
    return u % det == 0 && v % det == 0;
}

// Index of sub in within, throwing if sub is not actually contained.
inline int64_t lattice_index(const Lattice& sub, const Lattice& within) {
    if (sub.ring != within.ring)
        throw std::invalid_argument("lattice_index: lattices belong to different rings");
    int64_t det = within.basis.det();
    IntMat2 scaled = within.basis.adjugate() * sub.basis;
    if (scaled.a % det || scaled.b % det || scaled.c % det || scaled.d % det)
        throw std::invalid_argument("lattice_index: sublattice is not contained in the enclosing lattice");
    IntMat2 m{scaled.a / det, scaled.b / det, scaled.c / det, scaled.d / det};
    int64_t idx = m.det();
    return idx < 0 ? checked_neg(idx) : idx;
}

namespace detail {

inline bool coord_better(const RingSpec& ring, const Coord& cand, const Coord& cur) {
    int64_t nc = norm_sq(ring, cand);
    int64_t nx = norm_sq(ring, cur);
    if (nc != nx) return nc < nx;
    return cand < cur;
}

}  // namespace detail

// Representative of x + lat minimizing (squared length, lex order). Starts
// from a rounded Cramer solve and descends through basis offsets; the
// [-2, 2]^2 window covers every Voronoi-relevant coefficient pair of a
// Lagrange-reduced basis, so the local minimum it reaches is global.
inline Coord reduce_mod(const Lattice& lat, const Coord& x) {
    int64_t det = lat.basis.det();
    if (det == 0) throw std::invalid_argument("reduce_mod: singular basis");
    IntMat2 adj = lat.basis.adjugate();
    int64_t u = checked_add(checked_mul(adj.a, x.a), checked_mul(adj.b, x.b));
    int64_t v = checked_add(checked_mul(adj.c, x.a), checked_mul(adj.d, x.b));
    if (det < 0) {
        det = checked_neg(det);
        u = checked_neg(u);
        v = checked_neg(v);
    }
    Coord c{round_half_even(u, det), round_half_even(v, det)};
    Coord r = x - apply(lat.basis, c);
    bool improved = true;
    while (improved) {
        improved = false;
        for (int64_t i = -2; i <= 2; ++i) {
            for (int64_t j = -2; j <= 2; ++j) {
                if (i == 0 && j == 0) continue;
                Coord cand = r - apply(lat.basis, Coord{i, j});
                if (detail::coord_better(lat.ring, cand, r)) {
                    r = cand;
                    improved = true;
                }
            }
        }
    }
    return r;
}

// Membership in the half-open Voronoi cell of lat around the origin: the
// cell keeps exactly the reduce_mod representative of each coset, so tied
// boundary points are assigned to exactly one translate.
inline bool voronoi_member(const Lattice& lat, const Coord& x) {
    return reduce_mod(lat, x) == x;
}

// All coset representatives of within/sub in reduce_mod normal form, sorted
// lexicographically. The scan over [0, n)^2 covers every coset because
// n * within is contained in sub (n times the identity is the product of the
// coefficient matrix with its adjugate).
inline std::vector<Coord> coset_representatives(const Lattice& sub, const Lattice& within) {
    int64_t n = lattice_index(sub, within);
    std::set<Coord> reps;
    for (int64_t i = 0; i < n && static_cast<int64_t>(reps.size()) < n; ++i)
        for (int64_t j = 0; j < n && static_cast<int64_t>(reps.size()) < n; ++j)
            reps.insert(reduce_mod(sub, apply(within.basis, Coord{i, j})));
    if (static_cast<int64_t>(reps.size()) != n)
        throw std::logic_error("coset_representatives: enumeration missed a coset");
    return std::vector<Coord>(reps.begin(), reps.end());
}

// Every representative of x + sub that attains the minimal squared length,
// sorted lexicographically. Singleton when x reduces to the cell interior;
// boundary cosets return each tied point (the closed-cell choices).
inline std::vector<Coord> min_norm_coset_points(const Lattice& sub, const Coord& x) {
    Coord r0 = reduce_mod(sub, x);
    int64_t best = norm_sq(sub.ring, r0);
    std::set<Coord> out{r0};
    std::vector<Coord> frontier{r0};
    while (!frontier.empty()) {
        std::vector<Coord> next;
        for (const Coord& f : frontier) {
            for (int64_t i = -2; i <= 2; ++i) {
                for (int64_t j = -2; j <= 2; ++j) {
                    if (i == 0 && j == 0) continue;
                    Coord cand = f - apply(sub.basis, Coord{i, j});
                    if (norm_sq(sub.ring, cand) == best && out.insert(cand).second)
                        next.push_back(cand);
                }
            }
        }
        frontier = std::move(next);
    }
    return std::vector<Coord>(out.begin(), out.end());
}

// Closed Voronoi cell of lat around the origin as a CCW polygon in Cartesian
// coordinates, cut from a bounding square by the bisector half-planes of the
// eight nearest basis combinations.
inline std::vector<std::pair<double, double>> voronoi_cell_polygon(const Lattice& lat) {
    double r1 = std::sqrt(static_cast<double>(norm_sq(lat.ring, Coord{lat.basis.a, lat.basis.c})));
    double r2 = std::sqrt(static_cast<double>(norm_sq(lat.ring, Coord{lat.basis.b, lat.basis.d})));
    double bound = r1 + r2 + 1.0;
    std::vector<std::pair<double, double>> poly{
        {-bound, -bound}, {bound, -bound}, {bound, bound}, {-bound, bound}};
    for (int64_t i = -1; i <= 1; ++i) {
        for (int64_t j = -1; j <= 1; ++j) {
            if (i == 0 && j == 0) continue;
            auto [vx, vy] = embed_xy(lat.ring, apply(lat.basis, Coord{i, j}));
            double half = (vx * vx + vy * vy) / 2.0;
            // Clip poly against vx*x + vy*y <= half (Sutherland-Hodgman).
            std::vector<std::pair<double, double>> clipped;
            size_t sz = poly.size();
            for (size_t k = 0; k < sz; ++k) {
                auto [ax, ay] = poly[k];
                auto [bx, by] = poly[(k + 1) % sz];
                double da = vx * ax + vy * ay - half;
                double db = vx * bx + vy * by - half;
                if (da <= 0) clipped.emplace_back(ax, ay);
                if ((da < 0 && db > 0) || (da > 0 && db < 0)) {
                    double t = da / (da - db);
                    clipped.emplace_back(ax + t * (bx - ax), ay + t * (by - ay));
                }
            }
            poly = std::move(clipped);
        }
    }
    return poly;
}

inline double polygon_area(const std::vector<std::pair<double, double>>& poly) {
    double twice = 0.0;
    size_t sz = poly.size();
    for (size_t k = 0; k < sz; ++k) {
        auto [ax, ay] = poly[k];
        auto [bx, by] = poly[(k + 1) % sz];
        twice += ax * by - bx * ay;
    }
    return twice / 2.0;
}

inline double polygon_perimeter(const std::vector<std::pair<double, double>>& poly) {
    double total = 0.0;
    size_t sz = poly.size();
    for (size_t k = 0; k < sz; ++k) {
        auto [ax, ay] = poly[k];
        auto [bx, by] = poly[(k + 1) % sz];
        total += std::hypot(bx - ax, by - ay);
    }
    return total;
}

}  // namespace crtarray
