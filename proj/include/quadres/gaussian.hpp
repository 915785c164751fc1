#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quadres/core_arith.hpp"

namespace quadres {

/// Element re + im*i of the Gaussian integers.
struct GaussianInt {
    Int re = 0;
    Int im = 0;

    GaussianInt() = default;
    GaussianInt(Int real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
    GaussianInt(Int real, Int imag) : re(std::move(real)), im(std::move(imag)) {}
    GaussianInt(int real) : re(real) {}  // NOLINT(google-explicit-constructor)

    static GaussianInt i() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianInt conj() const { return {re, -im}; }

    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianInt& operator-=(const GaussianInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianInt& operator*=(const GaussianInt& o) {
        Int r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
    friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
    friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
    friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

/// Orders by (norm, re, im).
bool norm_order(const GaussianInt& a, const GaussianInt& b);

std::ostream& operator<<(std::ostream& os, const GaussianInt& z);

/// "a+bi" / "a-bi" / "bi" / "a" with no spaces; a bare "i" coefficient is
/// written without the 1.
std::string to_string(const GaussianInt& z);
std::optional<GaussianInt> parse_gaussian(std::string_view text);

Int norm(const GaussianInt& z);
bool is_unit(const GaussianInt& z);
GaussianInt pow(GaussianInt base, unsigned exponent);

/// {z, i*z, -z, -i*z}. Throws zero_argument for 0.
std::array<GaussianInt, 4> associates(const GaussianInt& z);

/// The associate with re > 0 and im >= 0 (0 maps to 0).
GaussianInt canonical_associate(const GaussianInt& z);

/// The unit u with z == u * canonical_associate(z).
GaussianInt canonical_unit(const GaussianInt& z);

struct GaussianDivRem {
    GaussianInt quotient;
    GaussianInt remainder;  // norm <= norm(divisor) / 2
};

/// Division with remainder rounding each coordinate of a/b to the nearest
/// integer, ties toward the floor. Throws division_by_zero.
GaussianDivRem div_rem(const GaussianInt& a, const GaussianInt& b);

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<GaussianInt> exact_div(const GaussianInt& a, const GaussianInt& b);

bool divides(const GaussianInt& d, const GaussianInt& a);

/// Euclidean gcd, canonical associate. Throws both_zero.
GaussianInt gcd(const GaussianInt& a, const GaussianInt& b);

/// Remainder norms visited by the Euclidean algorithm, starting with
/// norm(b); strictly decreasing down to 0.
std::vector<Int> euclid_norm_sequence(const GaussianInt& a, const GaussianInt& b);

bool is_gaussian_prime(const GaussianInt& z);

struct GaussianPrimePower {
    GaussianInt prime;  // canonical associate
    unsigned exponent = 0;

    bool operator==(const GaussianPrimePower&) const = default;
};

struct GaussianFactorization {
    GaussianInt unit{1};
    std::vector<GaussianPrimePower> factors;  // sorted by (norm, re, im)

    GaussianInt value() const;
    bool operator==(const GaussianFactorization&) const = default;
};

/// Unique factorization of a non-zero non-unit. Throws zero_or_unit.
GaussianFactorization factor(const GaussianInt& z);

namespace detail {

/// factor() driven by an explicit rational factorization of norm(z),
/// processed in the given order. Exposed so that tests can permute it.
GaussianFactorization factor_with_norm_factors(const GaussianInt& z, std::span<const PrimePower> norm_factors);

}  // namespace detail

}  // namespace quadres
