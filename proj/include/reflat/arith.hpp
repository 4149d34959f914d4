#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>

#include "reflat/error.hpp"

namespace reflat {

using Int = std::int64_t;

// Checked 64-bit arithmetic. Every geometric routine goes through these, so a
// result is either exact or an OverflowError; it never wraps.
namespace checked {

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("multiplication");
    return r;
}

inline Int neg(Int a) { return sub(0, a); }

/// a*b + c*d without intermediate wraparound.
inline Int mul_add(Int a, Int b, Int c, Int d) {
    __int128 r = static_cast<__int128>(a) * b + static_cast<__int128>(c) * d;
    if (r > INT64_MAX || r < INT64_MIN)
        throw OverflowError("multiply-add");
    return static_cast<Int>(r);
}

inline Int narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw OverflowError("narrowing");
    return static_cast<Int>(v);
}

} // namespace checked

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

/// Extended gcd: returns g >= 0 and sets x, y with a*x + b*y = g.
inline Int ext_gcd(Int a, Int b, Int &x, Int &y) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

/// Floor division for signed integers (b != 0).
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

/// Mathematical modulus with result in [0, |b|).
inline Int mod(Int a, Int b) {
    Int r = a % b;
    if (r < 0)
        r += (b < 0 ? -b : b);
    return r;
}

} // namespace reflat
