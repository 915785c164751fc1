#pragma once

#include "quadres/core_arith.hpp"

namespace quadres {

/// Roots of X^2 == a (mod p) for an odd prime p not dividing a: empty, or
/// exactly {b, p - b}.
ResidueSet sqrt_mod_prime(const Int& a, const Int& p);

/// Roots of X^2 == a (mod p^e), p odd prime, p not dividing a, by Hensel
/// lifting the prime root e - 1 times. Zero or two residues.
ResidueSet lift_odd_prime_power(const Int& a, const Int& p, unsigned e);

/// Roots of X^2 == a (mod 2^e) for odd a: {1} for e = 1, {1, 3} or nothing
/// for e = 2, four residues or nothing for e >= 3.
ResidueSet sqrt_mod_2e(const Int& a, unsigned e);

/// Every root of X^2 == a (mod n), gcd(a, n) = 1, n >= 1. Throws
/// not_coprime.
ResidueSet sqrt_mod(const Int& a, const Int& n);

/// Residuosity test from the per-prime conditions alone; no enumeration.
bool is_quadratic_residue(const Int& a, const Int& n);

/// Every root of X^2 == a (mod n) with no coprimality requirement. Prime
/// powers dividing a are peeled off before the coprime solvers run.
ResidueSet sqrt_mod_general(const Int& a, const Int& n);

namespace detail {

/// The halving search b = 1 .. (p-1)/2 used as the reference for the
/// Tonelli-Shanks path. Returns the smaller root, or nullopt.
std::optional<Int> prime_root_by_search(const Int& a, const Int& p);

}  // namespace detail

}  // namespace quadres
