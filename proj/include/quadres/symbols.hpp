#pragma once

#include <ostream>

#include "quadres/int.hpp"

namespace quadres {

/// Value of a Legendre or Jacobi symbol. zero exactly when the arguments
/// share a factor.
enum class Symbol : int { negative = -1, zero = 0, positive = 1 };

constexpr int to_int(Symbol s) { return static_cast<int>(s); }

constexpr Symbol operator*(Symbol a, Symbol b) { return static_cast<Symbol>(to_int(a) * to_int(b)); }

inline std::ostream& operator<<(std::ostream& os, Symbol s) { return os << to_int(s); }

/// Legendre symbol by Euler's criterion a^((p-1)/2) mod p. Throws
/// not_odd_prime unless p passes the primality check.
Symbol legendre_euler(const Int& a, const Int& p);

/// Legendre symbol by counting the negative minimal residues of
/// a, 2a, ..., ((p-1)/2)a. Throws not_coprime when p | a.
Symbol legendre_gauss_lemma(const Int& a, const Int& p);

/// Jacobi symbol (a/n) for odd n, computed without factoring n. A negative
/// n is treated as |n|; (a/1) is +1 for every a, including 0.
/// Throws even_modulus for even n (including 0).
Symbol jacobi(const Int& a, const Int& n);

/// Jacobi symbol as the product of Legendre symbols over the factorization
/// of n. Independent of jacobi(); used to cross-check it.
Symbol jacobi_by_definition(const Int& a, const Int& n);

}  // namespace quadres
