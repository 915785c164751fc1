#pragma once

#include <span>
#include <vector>

#include "quadres/int.hpp"

namespace quadres {

struct ExtGcd {
    Int g;  // gcd(|a|, |b|) >= 0
    Int s;
    Int t;  // s*a + t*b == g
};

struct PrimePower {
    Int prime;
    unsigned exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

/// n = sign * prod(prime^exponent), primes strictly increasing.
struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;

    Int value() const;
    bool operator==(const Factorization&) const = default;
};

/// A modulus together with the sorted set of incongruent residues solving
/// some congruence modulo it.
struct ResidueSet {
    Int modulus = 1;
    std::vector<Int> residues;

    bool empty() const { return residues.empty(); }
    std::size_t size() const { return residues.size(); }
    bool operator==(const ResidueSet&) const = default;
};

/// One prime-power slice handed to crt_combine.
struct CrtComponent {
    Int modulus;
    std::vector<Int> residues;
};

ExtGcd ext_gcd(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

/// Returns u in [1, n) with a*u == 1 (mod n). Throws not_invertible.
Int mod_inverse(const Int& a, const Int& n);

/// a^e mod n in [0, n) by square-and-multiply.
Int mod_pow(const Int& a, const Int& e, const Int& n);

/// Deterministic for n < 2^64 (Miller-Rabin with the first twelve prime
/// bases). Beyond that the same bases give a strong-probable-prime answer.
bool is_prime(const Int& n);

Factorization factorize(const Int& n);

/// All combinations of component residues lifted to residues modulo the
/// product of the moduli, sorted ascending. Throws non_coprime_moduli.
ResidueSet crt_combine(std::span<const CrtComponent> components);

Int pow(const Int& base, unsigned exponent);

/// Largest r with r*r <= n (n >= 0).
Int isqrt(const Int& n);

}  // namespace quadres
