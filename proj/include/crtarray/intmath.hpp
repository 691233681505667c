#pragma once

#include <cstdint>
#include <stdexcept>

#include "checked.hpp"

namespace crtarray {

inline bool is_rational_prime(int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (int64_t k = 3; k <= n / k; k += 2)
        if (n % k == 0) return false;
    return true;
}

// Floor division, well defined for negative numerators. d must be positive.
inline int64_t floor_div(int64_t n, int64_t d) {
    int64_t q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

// Nearest integer to n/d with ties rounded to the even quotient. d > 0.
inline int64_t round_half_even(int64_t n, int64_t d) {
    int64_t q = floor_div(n, d);
    int64_t r = checked_sub(n, checked_mul(q, d));  // 0 <= r < d
    int64_t twice = checked_mul(2, r);
    if (twice < d) return q;
    if (twice > d) return checked_add(q, 1);
    return (q % 2 == 0) ? q : checked_add(q, 1);
}

// a^e mod p. Safe for p up to 2^62 via 128-bit intermediate products.
inline int64_t modpow(int64_t a, int64_t e, int64_t p) {
    if (p <= 0) throw std::invalid_argument("modpow: modulus must be positive");
    a %= p;
    if (a < 0) a += p;
    __int128 acc = 1, base = a;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int64_t>(acc);
}

// Legendre symbol (a/p) via Euler's criterion. p must be an odd prime.
inline int legendre(int64_t a, int64_t p) {
    if (p == 2 || !is_rational_prime(p))
        throw std::invalid_argument("legendre: p must be an odd prime");
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    int64_t e = modpow(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

}  // namespace crtarray
