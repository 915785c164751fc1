#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "doctest.h"
#include "quadres/core_arith.hpp"
#include "quadres/error.hpp"

namespace quadres::test {

inline std::vector<Int> ints(std::initializer_list<long long> values) {
    std::vector<Int> out;
    for (long long v : values) out.emplace_back(v);
    return out;
}

/// Every x in [0, n) with x^2 == a (mod n), straight from the definition.
inline std::vector<Int> scan_squares(long long a, long long n) {
    std::vector<Int> out;
    const long long target = ((a % n) + n) % n;
    for (long long x = 0; x < n; ++x)
        if (x * x % n == target) out.emplace_back(x);
    return out;
}

inline long long small_gcd(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        long long r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline bool small_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Fixed-seed source for the property tests.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x9e3779b97f4a7c15ULL ^ salt); }

inline long long uniform(std::mt19937_64& gen, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(gen);
}

}  // namespace quadres::test

// Runs expr and checks that it throws MathError carrying code.
#define CHECK_ERRC(expr, expected_code)                                           \
    do {                                                                 \
        bool quadres_thrown_ = false;                                    \
        try {                                                            \
            (void)(expr);                                                \
        } catch (const ::quadres::MathError& quadres_e_) {               \
            quadres_thrown_ = true;                                      \
            CHECK_MESSAGE(quadres_e_.code() == (expected_code), quadres_e_.what()); \
        }                                                                \
        CHECK_MESSAGE(quadres_thrown_, "expected MathError from " #expr); \
    } while (false)
