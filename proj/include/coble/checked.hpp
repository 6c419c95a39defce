#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coble {

using i64 = std::int64_t;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : Error {
    OverflowError() : Error("integer overflow") {}
};

inline i64 add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline i64 sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline i64 mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline i64 neg(i64 a) { return sub(0, a); }

// Exact halving; throws when the argument is odd.
inline i64 half_exact(i64 a, const char* what) {
    if (a % 2 != 0) throw Error(std::string(what) + ": odd value " + std::to_string(a));
    return a / 2;
}

}  // namespace coble
