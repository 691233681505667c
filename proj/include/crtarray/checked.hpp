#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crtarray {

// Every int64 operation in the library funnels through these helpers so that
// overflow raises instead of wrapping.
struct arithmetic_overflow : std::overflow_error {
    explicit arithmetic_overflow(const std::string& msg) : std::overflow_error(msg) {}
};

// Raised when a ring cannot support the requested operation (gcd outside the
// norm-Euclidean rings, p = 2 classification, inconclusive coprimality).
struct unsupported_operation : std::domain_error {
    explicit unsupported_operation(const std::string& msg) : std::domain_error(msg) {}
};

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow("int64 add overflow");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_overflow("int64 sub overflow");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow("int64 mul overflow");
    return r;
}

inline int64_t checked_neg(int64_t a) { return checked_sub(0, a); }

}  // namespace crtarray
