#pragma once

#include <cstdint>

#include "hirzlog/error.hpp"

// Overflow-checked 64-bit integer arithmetic. Every quantity in the library is
// an exact integer (or a ratio of two), so silent wraparound is never allowed.
namespace hirzlog::checked {

using Int = std::int64_t;

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in multiplication");
    return r;
}

inline Int neg(Int a) { return sub(0, a); }

// Floor division for a positive divisor.
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace hirzlog::checked
