#pragma once

#include <vector>

#include "quadres/core_arith.hpp"
#include "quadres/symbols.hpp"
#include "quadres/two_squares.hpp"

// Definition-level reference implementations. Nothing here calls into the
// solvers it is used to check; every answer comes from a direct scan.
namespace quadres::oracle {

/// Largest number of candidates any single oracle call will examine.
inline constexpr long long kScanBudget = 1'000'000;

/// {x in [0, n) : x^2 == a (mod n)}.
ResidueSet brute_sqrt_mod(const Int& a, const Int& n);

/// {x in [0, n) : n | a x^2 + b x + c}.
ResidueSet brute_quadratic(const Int& a, const Int& b, const Int& c, const Int& n);

/// All ordered signed (A, B) with A^2 + B^2 = n, sorted lexicographically.
std::vector<TwoSquareRep> brute_two_squares(const Int& n);

/// Legendre symbol from the definition: 0 if p | a, else +1 iff some
/// x in [1, p-1] squares to a. Throws not_odd_prime.
Symbol brute_legendre(const Int& a, const Int& p);

/// Jacobi symbol as a product of brute_legendre over a trial-division
/// factorization of |n|.
Symbol brute_jacobi(const Int& a, const Int& n);

/// Trial-division primality.
bool brute_is_prime(const Int& n);

}  // namespace quadres::oracle
