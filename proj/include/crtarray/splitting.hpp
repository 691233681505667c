#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "intmath.hpp"
#include "ring.hpp"

namespace crtarray {

enum class PrimeClass { Split, Inert, Ramified };

inline const char* to_string(PrimeClass c) {
    switch (c) {
        case PrimeClass::Split: return "split";
        case PrimeClass::Inert: return "inert";
        case PrimeClass::Ramified: return "ramified";
    }
    return "?";
}

// Splitting behaviour of an odd rational prime in the ring: ramified when
// p | D, split when D is a nonzero square mod p, inert otherwise. p = 2 needs
// discriminant-parity rules this routine does not implement.
inline PrimeClass classify_rational_prime(int64_t p, const RingSpec& ring) {
    if (p == 2)
        throw unsupported_operation("classify_rational_prime: p = 2 is not covered by the Legendre test");
    if (!is_rational_prime(p))
        throw std::invalid_argument("classify_rational_prime: p must be an odd prime");
    if ((-ring.D) % p == 0) return PrimeClass::Ramified;
    return legendre(ring.D, p) == 1 ? PrimeClass::Split : PrimeClass::Inert;
}

// Tonelli-Shanks square root mod an odd prime, normalized to min(x, p - x).
inline int64_t sqrt_mod(int64_t a, int64_t p) {
    int lg = legendre(a, p);  // validates p
    a %= p;
    if (a < 0) a += p;
    if (lg == 0) return 0;
    if (lg != 1) throw std::invalid_argument("sqrt_mod: a is not a quadratic residue mod p");
    int64_t x;
    if (p % 4 == 3) {
        x = modpow(a, (p + 1) / 4, p);
    } else {
        int64_t q = p - 1, s = 0;
        while (q % 2 == 0) q /= 2, ++s;
        int64_t z = 2;
        while (legendre(z, p) != -1) ++z;
        int64_t m = s;
        int64_t c = modpow(z, q, p);
        int64_t t = modpow(a, q, p);
        int64_t r = modpow(a, (q + 1) / 2, p);
        while (t != 1) {
            int64_t i = 0, probe = t;
            while (probe != 1) {
                probe = static_cast<int64_t>(__int128(probe) * probe % p);
                ++i;
            }
            int64_t b = modpow(c, int64_t{1} << (m - i - 1), p);
            m = i;
            c = static_cast<int64_t>(__int128(b) * b % p);
            t = static_cast<int64_t>(__int128(t) * c % p);
            r = static_cast<int64_t>(__int128(r) * b % p);
        }
        x = r;
    }
    return std::min(x, p - x);
}

struct SplitResult {
    QuadInt pi;      // canonical generator of the first prime ideal above p
    QuadInt pihat;   // conjugate(pi); pi * pihat = p exactly
};

namespace detail {

// All elements of norm n, via the quadratic in m1 for each admissible m2.
inline std::vector<QuadInt> norm_equation_solutions(const RingSpec& ring, int64_t n) {
    std::vector<QuadInt> out;
    // norm = (m1 + B m2 / 2)^2 + (4C - B^2)/4 * m2^2, so m2 is bounded by
    // sqrt(4n / (4C - B^2)).
    int64_t denom = 4 * ring.C - ring.B * ring.B;
    auto bound = static_cast<int64_t>(std::sqrt(4.0 * static_cast<double>(n) / static_cast<double>(denom))) + 1;
    for (int64_t m2 = -bound; m2 <= bound; ++m2) {
        // m1^2 - B m2 m1 + (C m2^2 - n) = 0, so m1 = (B m2 +- t) / 2 with
        // t^2 = D m2^2 + 4n.
        int64_t disc = checked_add(checked_mul(checked_mul(ring.D, m2), m2), checked_mul(4, n));
        if (disc < 0) continue;
        auto t = static_cast<int64_t>(std::llround(std::sqrt(static_cast<double>(disc))));
        while (t > 0 && t * t > disc) --t;
        while ((t + 1) * (t + 1) <= disc) ++t;
        if (t * t != disc) continue;
        for (int64_t sign : {-1, 1}) {
            int64_t num = checked_add(checked_mul(sign, t), checked_mul(ring.B, m2));
            if (num % 2 != 0) continue;
            QuadInt cand{ring, num / 2, m2};
            if (norm(cand) == n) out.push_back(cand);
            if (t == 0) break;
        }
    }
    return out;
}

}  // namespace detail

// Factor an odd split prime as p = pi * conjugate(pi). The first ideal is the
// one containing x - q for the smaller root x of f mod p; its generator is
// computed by a Euclidean gcd where available and otherwise by enumerating
// the norm equation over the principal ideal ring.
inline SplitResult split_prime(int64_t p, const RingSpec& ring) {
    PrimeClass cls = classify_rational_prime(p, ring);
    if (cls == PrimeClass::Ramified)
        throw std::domain_error("split_prime: p is a ramified prime in this ring");
    if (cls == PrimeClass::Inert)
        throw std::domain_error("split_prime: p is an inert prime in this ring");

    int64_t disc = checked_sub(checked_mul(ring.B, ring.B), checked_mul(4, ring.C));
    int64_t s = sqrt_mod(disc, p);
    int64_t inv2 = (p + 1) / 2;  // 2 * inv2 = p + 1 = 1 (mod p)
    auto root = [&](int64_t sgn) {
        int64_t r = static_cast<int64_t>(__int128(sgn * s - ring.B) % p * inv2 % p);
        return r < 0 ? r + p : r;
    };
    int64_t x = std::min(root(1), root(-1));
    QuadInt target{ring, x, -1};  // x - q

    QuadInt pi;
    if (ring.euclidean) {
        pi = gcd(QuadInt{ring, p, 0}, target);
    } else {
        std::vector<QuadInt> cands = detail::norm_equation_solutions(ring, p);
        std::sort(cands.begin(), cands.end(), [](const QuadInt& a, const QuadInt& b) {
            return a.m1 < b.m1 || (a.m1 == b.m1 && a.m2 < b.m2);
        });
        const QuadInt* hit = nullptr;
        for (const QuadInt& c : cands)
            if (exact_div(target, c)) {
                hit = &c;
                break;
            }
        if (!hit)
            throw std::logic_error("split_prime: norm equation enumeration found no generator");
        pi = canonical_associate(*hit);
    }
    if (norm(pi) != p) throw std::logic_error("split_prime: generator norm is not p");
    QuadInt pihat = conjugate(pi);
    return {pi, pihat};
}

}  // namespace crtarray
