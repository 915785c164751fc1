#pragma once

#include <vector>

#include "quadres/int.hpp"

namespace quadres {

/// n = a^2 + b^2, primitive iff gcd(a, b) = 1.
struct TwoSquareRep {
    Int a;
    Int b;
    bool primitive = false;

    Int value() const { return a * a + b * b; }
    bool operator==(const TwoSquareRep&) const = default;
};

TwoSquareRep make_rep(Int a, Int b);

/// Lexicographic on (a, b).
bool lex_less(const TwoSquareRep& x, const TwoSquareRep& y);

/// True iff every prime 3 (mod 4) divides n to an even power. False for
/// negative n.
bool is_sum_of_two_squares(const Int& n);

/// True iff n or n/2 is odd with all prime factors 1 (mod 4).
bool has_primitive_representation(const Int& n);

/// The representation a >= b > 0 of a prime p = 2 or p == 1 (mod 4).
/// Throws wrong_residue_class for p == 3 (mod 4).
TwoSquareRep represent_prime(const Int& p);

/// The pair x, y > 0 with x^2 + y^2 = n, gcd(x, y) = 1 and k*x == y (mod n),
/// found by pigeonholing k*x - y over the square grid 0 <= x, y <= isqrt(n).
/// Throws not_a_root unless k^2 == -1 (mod n).
TwoSquareRep rep_from_root(const Int& k, const Int& n);

/// r(n) = 4 (d1(n) - d3(n)), d1/d3 counting divisors 1 and 3 (mod 4);
/// r(0) = 1.
Int count_representations(const Int& n);

/// r(n) as 4 * prod(1 + e) * prod((1 + (-1)^f) / 2) over primes 1 and 3
/// (mod 4).
Int count_representations_by_factorization(const Int& n);

/// Every ordered signed (A, B) with A^2 + B^2 = n, built from the Gaussian
/// factorization of n, sorted lexicographically.
std::vector<TwoSquareRep> all_representations(const Int& n);

/// Primitive representations with x > 0, y > 0 (both orders listed), one
/// per choice of conjugate for each prime 1 (mod 4); 2^R entries. n = 1
/// yields the single pair (1, 0).
std::vector<TwoSquareRep> primitive_representations(const Int& n);

namespace detail {

/// Largest grid rep_from_root pigeonholes over; beyond it the root is
/// reduced by the Euclidean descent on (n, k).
inline constexpr unsigned long long kGridSearchLimit = 4'000'000ULL;

TwoSquareRep rep_from_root_by_descent(const Int& k, const Int& n);

}  // namespace detail

}  // namespace quadres
