#pragma once

#include <cmath>
#include <ostream>
#include <utility>

#include "rational.hpp"
#include "ring.hpp"

namespace crtarray {

// Exact value r + s*sqrt(rad) with rational r, s and a positive integer
// radicand. rad = 1 folds into the rational part, so componentwise equality
// is exact (every other radicand in use is square-free).
struct Surd {
    Rational r;
    Rational s;
    int64_t rad = 1;

    Surd() = default;
    Surd(const Rational& rr) : r(rr) {}
    Surd(int64_t n) : r(n) {}
    Surd(const Rational& rr, const Rational& ss, int64_t radicand) : r(rr), s(ss), rad(radicand) {
        if (rad <= 0) throw std::invalid_argument("surd radicand must be positive");
        if (rad == 1) {
            r = r + s;
            s = Rational(0);
        }
        if (s.is_zero()) rad = 1;
    }

    bool is_rational() const { return s.is_zero(); }

    friend int64_t common_radicand(const Surd& a, const Surd& b) {
        if (a.rad == 1) return b.rad;
        if (b.rad == 1 || a.rad == b.rad) return a.rad;
        throw std::invalid_argument("surds with different radicands");
    }

    friend Surd operator+(const Surd& a, const Surd& b) {
        return Surd(a.r + b.r, a.s + b.s, common_radicand(a, b));
    }
    friend Surd operator-(const Surd& a, const Surd& b) {
        return Surd(a.r - b.r, a.s - b.s, common_radicand(a, b));
    }
    friend Surd operator*(const Surd& a, const Surd& b) {
        int64_t d = common_radicand(a, b);
        return Surd(a.r * b.r + a.s * b.s * Rational(d), a.r * b.s + a.s * b.r, d);
    }
    Surd operator-() const { return Surd(-r, -s, rad); }

    friend bool operator==(const Surd& a, const Surd& b) {
        return a.r == b.r && a.s == b.s && (a.s.is_zero() || a.rad == b.rad);
    }
    friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

    double to_double() const { return r.to_double() + s.to_double() * std::sqrt(static_cast<double>(rad)); }

    friend std::ostream& operator<<(std::ostream& os, const Surd& v) {
        if (v.is_rational()) return os << v.r;
        if (!v.r.is_zero()) os << v.r << '+';
        return os << v.s << "*sqrt(" << v.rad << ')';
    }
};

// Integer 2x2 matrix in row-major order; all products overflow-checked.
struct IntMat2 {
    int64_t a = 0, b = 0, c = 0, d = 0;  // [[a, b], [c, d]]

    static IntMat2 identity() { return {1, 0, 0, 1}; }

    friend IntMat2 operator*(const IntMat2& x, const IntMat2& y) {
        return {checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
                checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
                checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
                checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d))};
    }
    friend IntMat2 operator+(const IntMat2& x, const IntMat2& y) {
        return {checked_add(x.a, y.a), checked_add(x.b, y.b), checked_add(x.c, y.c),
                checked_add(x.d, y.d)};
    }
    friend bool operator==(const IntMat2& x, const IntMat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    int64_t det() const { return checked_sub(checked_mul(a, d), checked_mul(b, c)); }
    IntMat2 adjugate() const { return {d, checked_neg(b), checked_neg(c), a}; }
    IntMat2 scaled(int64_t k) const {
        return {checked_mul(a, k), checked_mul(b, k), checked_mul(c, k), checked_mul(d, k)};
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMat2& m) {
        return os << "[[" << m.a << ',' << m.b << "],[" << m.c << ',' << m.d << "]]";
    }
};

// 2x2 matrix over the surd field, row-major.
struct ExactMat2 {
    Surd a, b, c, d;  // [[a, b], [c, d]]

    static ExactMat2 identity() { return {Surd(1), Surd(0), Surd(0), Surd(1)}; }
    static ExactMat2 from_int(const IntMat2& m) {
        return {Surd(m.a), Surd(m.b), Surd(m.c), Surd(m.d)};
    }

    friend ExactMat2 operator*(const ExactMat2& x, const ExactMat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend ExactMat2 operator*(const ExactMat2& x, const IntMat2& y) {
        return x * from_int(y);
    }
    friend bool operator==(const ExactMat2& x, const ExactMat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    Surd det() const { return a * d - b * c; }
    ExactMat2 transpose() const { return {a, c, b, d}; }

    friend std::ostream& operator<<(std::ostream& os, const ExactMat2& m) {
        return os << "[[" << m.a << ',' << m.b << "],[" << m.c << ',' << m.d << "]]";
    }
};

// Column embedding of the basis {1, q} into the plane: 1 maps to (1, 0) and
// q to (-B/2, sqrt(4C - B^2)/2). The radicand is always presented as |D|,
// using sqrt(4|D|) = 2 sqrt(|D|) for the even-discriminant rings.
inline ExactMat2 generator_matrix(const RingSpec& ring) {
    Surd im_q = ring.B == 0 ? Surd(Rational(0), Rational(1), -ring.D)
                            : Surd(Rational(0), Rational(1, 2), -ring.D);
    return {Surd(1), Surd(Rational(-ring.B, 2)), Surd(0), im_q};
}

// Multiplication-by-m in the basis {1, q}: column j holds the coordinates of
// m * basis_j, so (1, q) * matrix_rep(m) = (m, m q).
inline IntMat2 matrix_rep(const QuadInt& m) {
    return {m.m1, checked_neg(checked_mul(m.ring.C, m.m2)), m.m2,
            checked_sub(m.m1, checked_mul(m.ring.B, m.m2))};
}

// Adjugate of matrix_rep(m); equals matrix_rep(conjugate(m)), and
// matrix_rep(m) * adjugate_rep(m) = norm(m) * I.
inline IntMat2 adjugate_rep(const QuadInt& m) {
    return {checked_sub(m.m1, checked_mul(m.ring.B, m.m2)), checked_mul(m.ring.C, m.m2),
            checked_neg(m.m2), m.m1};
}

// Planar basis of the ideal lattice generated by m: the generator matrix of
// the ring times the multiplication matrix of m.
inline ExactMat2 ideal_lattice_basis(const QuadInt& m) {
    return generator_matrix(m.ring) * matrix_rep(m);
}

// Gram matrix of the embedded basis: G^T G = [[1, -B/2], [-B/2, C]].
inline ExactMat2 gram_form(const RingSpec& ring) {
    Rational off(-ring.B, 2);
    return {Surd(1), Surd(off), Surd(off), Surd(Rational(ring.C))};
}

// Matrix form of the Bezout identity for coprime m, n:
// matrix_rep(m) * Cm + matrix_rep(n) * Dn = I.
inline std::pair<IntMat2, IntMat2> bezout_matrices(const QuadInt& m, const QuadInt& n) {
    BezoutPair bz = bezout(m, n);
    return {matrix_rep(bz.alpha), matrix_rep(bz.beta)};
}

}  // namespace crtarray
