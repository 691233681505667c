#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "checked.hpp"
#include "intmath.hpp"

namespace crtarray {

// The nine imaginary quadratic fields Q(sqrt(D)) whose ring of integers is a
// principal ideal domain, and the subset with a norm-Euclidean division.
inline constexpr int64_t kPidDiscriminants[] = {-1, -2, -3, -7, -11, -19, -43, -67, -163};
inline constexpr int64_t kEuclideanDiscriminants[] = {-1, -2, -3, -7, -11};

// Ring of integers of Q(sqrt(D)) presented through the minimal polynomial
// f(X) = X^2 + B*X + C of the second basis element q, i.e. q^2 = -B*q - C.
// Elements are integer pairs (m1, m2) meaning m1 + m2*q.
struct RingSpec {
    int64_t D = -1;
    int64_t B = 0;
    int64_t C = 1;
    bool euclidean = true;

    friend bool operator==(const RingSpec& a, const RingSpec& b) { return a.D == b.D; }
    friend bool operator!=(const RingSpec& a, const RingSpec& b) { return a.D != b.D; }

    // Display symbol for q: i for the Gaussian ring, w for the Eisenstein
    // integers (w = exp(i*pi/3)), plain q otherwise.
    char symbol() const { return D == -1 ? 'i' : (D == -3 ? 'w' : 'q'); }
};

inline bool is_square_free(int64_t n) {
    if (n < 0) n = -n;
    for (int64_t k = 2; k * k <= n; ++k)
        if (n % (k * k) == 0) return false;
    return true;
}

inline RingSpec ring_from_d(int64_t D) {
    if (D >= 0)
        throw std::invalid_argument("ring_from_d: D must be negative (real quadratic fields unsupported)");
    if (!is_square_free(D))
        throw std::invalid_argument("ring_from_d: D must be square-free");
    bool pid = false;
    for (int64_t d : kPidDiscriminants) pid |= (d == D);
    if (!pid)
        throw std::invalid_argument("ring_from_d: class number exceeds one, not a principal ideal domain");
    RingSpec ring;
    ring.D = D;
    bool one_mod_four = ((D % 4) + 4) % 4 == 1;
    if (one_mod_four) {
        ring.B = -1;
        ring.C = (1 - D) / 4;
    } else {
        ring.B = 0;
        ring.C = -D;
    }
    ring.euclidean = false;
    for (int64_t d : kEuclideanDiscriminants) ring.euclidean |= (d == D);
    return ring;
}

struct QuadInt {
    RingSpec ring;
    int64_t m1 = 0;  // coordinates in the integral basis {1, q}
    int64_t m2 = 0;

    QuadInt() = default;
    QuadInt(RingSpec r, int64_t a, int64_t b) : ring(r), m1(a), m2(b) {}

    bool is_zero() const { return m1 == 0 && m2 == 0; }

    friend bool operator==(const QuadInt& a, const QuadInt& b) {
        return a.ring == b.ring && a.m1 == b.m1 && a.m2 == b.m2;
    }
    friend bool operator!=(const QuadInt& a, const QuadInt& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const QuadInt& v) {
        os << v.m1 << (v.m2 < 0 ? '-' : '+');
        os << (v.m2 < 0 ? -v.m2 : v.m2) << v.ring.symbol();
        return os;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }
};

inline void require_same_ring(const QuadInt& a, const QuadInt& b) {
    if (a.ring != b.ring) throw std::invalid_argument("operands belong to different rings");
}

inline QuadInt operator+(const QuadInt& a, const QuadInt& b) {
    require_same_ring(a, b);
    return {a.ring, checked_add(a.m1, b.m1), checked_add(a.m2, b.m2)};
}

inline QuadInt operator-(const QuadInt& a, const QuadInt& b) {
    require_same_ring(a, b);
    return {a.ring, checked_sub(a.m1, b.m1), checked_sub(a.m2, b.m2)};
}

inline QuadInt operator-(const QuadInt& a) { return {a.ring, checked_neg(a.m1), checked_neg(a.m2)}; }

// (a1 + a2 q)(b1 + b2 q) with q^2 = -B q - C.
inline QuadInt operator*(const QuadInt& a, const QuadInt& b) {
    require_same_ring(a, b);
    int64_t cross = checked_mul(a.m2, b.m2);
    int64_t c1 = checked_sub(checked_mul(a.m1, b.m1), checked_mul(a.ring.C, cross));
    int64_t c2 = checked_sub(checked_add(checked_mul(a.m1, b.m2), checked_mul(a.m2, b.m1)),
                             checked_mul(a.ring.B, cross));
    return {a.ring, c1, c2};
}

inline QuadInt conjugate(const QuadInt& a) {
    return {a.ring, checked_sub(a.m1, checked_mul(a.ring.B, a.m2)), checked_neg(a.m2)};
}

// N(m1 + m2 q) = m1^2 - B m1 m2 + C m2^2, non-negative for D < 0.
inline int64_t norm(const QuadInt& a) {
    int64_t n = checked_add(
        checked_sub(checked_mul(a.m1, a.m1), checked_mul(a.ring.B, checked_mul(a.m1, a.m2))),
        checked_mul(a.ring.C, checked_mul(a.m2, a.m2)));
    return n;
}

inline bool is_unit(const QuadInt& a) { return norm(a) == 1; }

// All units of the ring: 4 for D = -1, 6 for D = -3, otherwise {1, -1}.
inline std::vector<QuadInt> units(const RingSpec& ring) {
    std::vector<QuadInt> us;
    for (int64_t u1 = -1; u1 <= 1; ++u1)
        for (int64_t u2 = -1; u2 <= 1; ++u2) {
            QuadInt u{ring, u1, u2};
            if (norm(u) == 1) us.push_back(u);
        }
    return us;
}

// Exact ring division: n / m when m divides n, nullopt otherwise.
inline std::optional<QuadInt> exact_div(const QuadInt& n, const QuadInt& m) {
    require_same_ring(n, m);
    if (m.is_zero()) throw std::invalid_argument("exact_div: division by zero");
    QuadInt t = n * conjugate(m);
    int64_t N = norm(m);
    if (t.m1 % N != 0 || t.m2 % N != 0) return std::nullopt;
    return QuadInt{n.ring, t.m1 / N, t.m2 / N};
}

struct DivModResult {
    QuadInt q;
    QuadInt r;
};

// Euclidean division n = q*m + r with norm(r) < norm(m). The quotient starts
// from coordinatewise nearest rounding (ties to even) of n*conj(m)/N(m); for
// D = -7 and D = -11 that point can land outside the Euclidean bound, so the
// eight neighboring quotients are also tried and the remainder minimizing
// (norm, lexicographic coordinates) wins. Deterministic in all cases.
inline DivModResult euclid_divmod(const QuadInt& n, const QuadInt& m) {
    require_same_ring(n, m);
    if (!n.ring.euclidean)
        throw unsupported_operation("euclid_divmod: ring is not norm-Euclidean");
    if (m.is_zero()) throw std::invalid_argument("euclid_divmod: division by zero");
    QuadInt t = n * conjugate(m);
    int64_t N = norm(m);
    int64_t q1 = round_half_even(t.m1, N);
    int64_t q2 = round_half_even(t.m2, N);
    QuadInt q{n.ring, q1, q2};
    QuadInt r = n - q * m;
    if (norm(r) < N) return {q, r};
    QuadInt best_q = q;
    QuadInt best_r = r;
    for (int64_t d1 = -1; d1 <= 1; ++d1)
        for (int64_t d2 = -1; d2 <= 1; ++d2) {
            QuadInt cq{n.ring, checked_add(q1, d1), checked_add(q2, d2)};
            QuadInt cr = n - cq * m;
            int64_t cn = norm(cr), bn = norm(best_r);
            if (cn < bn || (cn == bn && (cr.m1 < best_r.m1 ||
                                         (cr.m1 == best_r.m1 && cr.m2 < best_r.m2))))
                best_q = cq, best_r = cr;
        }
    if (norm(best_r) >= N)
        throw std::logic_error("euclid_divmod: no remainder below the divisor norm");
    return {best_q, best_r};
}

// Canonical representative among the unit multiples of a: restrict to those
// with m1 > 0 or (m1 = 0 and m2 > 0), then take the lexicographically
// smallest (m1, m2). Fixes which generator of an ideal gets reported.
inline QuadInt canonical_associate(const QuadInt& a) {
    if (a.is_zero()) return a;
    bool found = false;
    QuadInt best = a;
    for (const QuadInt& u : units(a.ring)) {
        QuadInt cand = a * u;
        if (!(cand.m1 > 0 || (cand.m1 == 0 && cand.m2 > 0))) continue;
        if (!found || cand.m1 < best.m1 || (cand.m1 == best.m1 && cand.m2 < best.m2)) {
            best = cand;
            found = true;
        }
    }
    if (!found) throw std::logic_error("canonical_associate: empty candidate set");
    return best;
}

// Euclidean gcd, canonically normalized. gcd(a, 0) = canonical associate of a.
inline QuadInt gcd(QuadInt a, QuadInt b) {
    require_same_ring(a, b);
    if (!a.ring.euclidean)
        throw unsupported_operation("gcd: ring is not norm-Euclidean");
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        QuadInt r = euclid_divmod(a, b).r;
        a = b;
        b = r;
    }
    return canonical_associate(a);
}

struct BezoutPair {
    QuadInt alpha;
    QuadInt beta;
};

// Extended Euclid for coprime a, b: returns alpha, beta with
// a*alpha + b*beta = 1 exactly (the final unit is divided out).
inline BezoutPair bezout(const QuadInt& a, const QuadInt& b) {
    require_same_ring(a, b);
    if (!a.ring.euclidean)
        throw unsupported_operation("bezout: ring is not norm-Euclidean");
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("bezout(0, 0) is undefined");
    QuadInt zero{a.ring, 0, 0}, one{a.ring, 1, 0};
    QuadInt r0 = a, r1 = b;
    QuadInt s0 = one, s1 = zero;
    QuadInt t0 = zero, t1 = one;
    while (!r1.is_zero()) {
        DivModResult d = euclid_divmod(r0, r1);
        r0 = r1;
        r1 = d.r;
        QuadInt s2 = s0 - d.q * s1;
        s0 = s1;
        s1 = s2;
        QuadInt t2 = t0 - d.q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (!is_unit(r0)) throw std::domain_error("bezout: operands are not coprime");
    QuadInt uinv = conjugate(r0);  // norm 1, so r0 * conj(r0) = 1
    BezoutPair out{s0 * uinv, t0 * uinv};
    if (a * out.alpha + b * out.beta != one)
        throw std::logic_error("bezout: identity check failed");
    return out;
}

namespace detail {

// Is a = unit * r for a rational prime r? If so report r.
inline std::optional<int64_t> rational_prime_factor(const QuadInt& a) {
    int64_t N = norm(a);
    auto root = static_cast<int64_t>(std::llround(std::sqrt(static_cast<double>(N))));
    for (int64_t r = root - 2; r <= root + 2; ++r) {
        if (r < 2 || r * r != N) continue;
        if (a.m1 % r == 0 && a.m2 % r == 0 && is_rational_prime(r)) return r;
    }
    return std::nullopt;
}

// Splitting class of 2, which Legendre-based classification cannot cover:
// 2 ramifies when D has even discriminant (D != 1 mod 4), splits when
// D = 1 mod 8 and stays inert when D = 5 mod 8.
inline bool two_is_inert(const RingSpec& ring) {
    if (((ring.D % 4) + 4) % 4 != 1) return false;  // 2 | disc, ramified
    return ((ring.D % 8) + 8) % 8 == 5;
}

}  // namespace detail

// Prime element test. For the Gaussian integers: a prime norm, or a unit
// multiple of a rational prime p = 3 (mod 4). For the Eisenstein integers:
// a prime norm, or a unit multiple of a rational prime p = 2 (mod 3). For
// the remaining rings: a prime norm, or a unit multiple of an inert
// rational prime.
inline bool is_prime_element(const QuadInt& a) {
    if (a.is_zero() || is_unit(a)) return false;
    if (a.ring.D == -1) {
        if (a.m1 != 0 && a.m2 != 0) return is_rational_prime(norm(a));
        int64_t v = a.m1 == 0 ? (a.m2 < 0 ? -a.m2 : a.m2) : (a.m1 < 0 ? -a.m1 : a.m1);
        return is_rational_prime(v) && v % 4 == 3;
    }
    if (a.ring.D == -3) {
        if (auto r = detail::rational_prime_factor(a)) return *r % 3 == 2;
        return is_rational_prime(norm(a));
    }
    if (auto r = detail::rational_prime_factor(a)) {
        if (*r == 2) return detail::two_is_inert(a.ring);
        return legendre(a.ring.D, *r) == -1;
    }
    return is_rational_prime(norm(a));
}

// Coprimality of m = m1 + m2 q with its own conjugate, decided purely by
// rational integer gcds. Case split on the presentation:
//   B = -1:          gcd(m1, m2) = 1 and gcd(2 m1 + m2, 4C - 1) = 1
//   B = 0, C even:   gcd(m1, m2) = 1 and gcd(m1, C) = 1
//   B = 0, C odd:    gcd(m1 + m2, m1 - m2) = 1 and gcd(m1, C) = 1
inline bool conjugate_pair_coprime(int64_t m1, int64_t m2, const RingSpec& ring) {
    if (m1 == 0 && m2 == 0)
        throw std::invalid_argument("conjugate_pair_coprime: m must be nonzero");
    if (ring.B == -1)
        return std::gcd(m1, m2) == 1 &&
               std::gcd(checked_add(checked_mul(2, m1), m2), checked_sub(checked_mul(4, ring.C), 1)) == 1;
    if (ring.C % 2 == 0) return std::gcd(m1, m2) == 1 && std::gcd(m1, ring.C) == 1;
    return std::gcd(checked_add(m1, m2), checked_sub(m1, m2)) == 1 && std::gcd(m1, ring.C) == 1;
}

// Coprimality of two ring elements. Euclidean rings use the gcd. Elsewhere
// the decision falls back to conclusive criteria only: units, conjugate
// pairs, coprime norms, or one operand exactly dividing the other.
inline bool are_coprime(const QuadInt& a, const QuadInt& b) {
    require_same_ring(a, b);
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("are_coprime(0, 0) is undefined");
    if (is_unit(a) || is_unit(b)) return true;
    if (a.is_zero() || b.is_zero()) return false;  // nonzero side is not a unit here
    if (a.ring.euclidean) return is_unit(gcd(a, b));
    if (b == conjugate(a)) return conjugate_pair_coprime(a.m1, a.m2, a.ring);
    if (std::gcd(norm(a), norm(b)) == 1) return true;
    if (exact_div(a, b) || exact_div(b, a)) return false;  // shared non-unit divisor
    throw unsupported_operation("are_coprime: inconclusive in a non-Euclidean ring");
}

}  // namespace crtarray
