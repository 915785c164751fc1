#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace quadres {

/// Exact signed integer of unbounded magnitude. Every scalar in the library
/// is an Int; there is no fixed-width arithmetic on the public surface.
using Int = boost::multiprecision::cpp_int;

/// Parses an optionally signed decimal literal. Returns nullopt on any
/// malformed input (empty, stray characters, lone sign).
std::optional<Int> parse_int(std::string_view text);

inline std::string to_string(const Int& value) { return value.str(); }

/// Least non-negative residue of a modulo n (n > 0).
inline Int mod(const Int& a, const Int& n) {
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

/// Floor division for n != 0 (cpp_int division truncates toward zero).
inline Int floor_div(const Int& a, const Int& n) {
    Int q = a / n;
    if ((a % n != 0) && ((a < 0) != (n < 0))) --q;
    return q;
}

inline bool is_even(const Int& a) { return !boost::multiprecision::bit_test(abs(a), 0); }

/// Narrowing conversion used on fast paths; nullopt when the value does not
/// fit.
inline std::optional<std::int64_t> to_i64(const Int& a) {
    if (a > std::numeric_limits<std::int64_t>::max() || a < std::numeric_limits<std::int64_t>::min())
        return std::nullopt;
    return a.convert_to<std::int64_t>();
}

inline std::optional<std::uint64_t> to_u64(const Int& a) {
    if (a < 0 || a > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
    return a.convert_to<std::uint64_t>();
}

}  // namespace quadres
