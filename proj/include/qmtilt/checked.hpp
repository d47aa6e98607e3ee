#pragma once

#include <stdexcept>

namespace qmtilt {

// Overflow-checked 64-bit arithmetic. All counting and polynomial code goes
// through these so that a too-large instance fails loudly instead of wrapping.

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

} // namespace qmtilt
