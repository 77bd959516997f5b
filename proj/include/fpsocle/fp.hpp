#pragma once

#include <cstdint>
#include <stdexcept>

namespace fpsocle {

// Arithmetic in the prime field F_p. Coefficients are canonical
// representatives in [0, p); p fits in 31 bits so products fit in 64.

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline std::uint32_t fp_reduce(std::int64_t a, std::uint32_t p) {
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    if (s >= p) s -= p;
    return static_cast<std::uint32_t>(s);
}

inline std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return fp_add(a, fp_neg(b, p), p);
}

inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t fp_pow(std::uint32_t a, std::uint64_t n, std::uint32_t p) {
    std::uint32_t r = 1 % p;
    std::uint32_t base = a % p;
    while (n > 0) {
        if (n & 1) r = fp_mul(r, base, p);
        base = fp_mul(base, base, p);
        n >>= 1;
    }
    return r;
}

inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw std::invalid_argument("fp_inv: zero has no inverse");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

inline std::uint32_t fp_div(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return fp_mul(a, fp_inv(b, p), p);
}

} // namespace fpsocle
