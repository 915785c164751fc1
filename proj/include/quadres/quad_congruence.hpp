#pragma once

#include "quadres/core_arith.hpp"

namespace quadres {

/// a*X^2 + b*X + c == 0 (mod n). Construction rejects n < 2 and
/// a == 0 (mod n); the latter is a linear problem for solve_linear.
class QuadCongruence {
public:
    QuadCongruence(Int a, Int b, Int c, Int n);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& n() const { return n_; }
    Int discriminant() const { return b_ * b_ - 4 * a_ * c_; }

    /// Value of a*x^2 + b*x + c reduced modulo n.
    Int evaluate(const Int& x) const { return mod(Int(a_ * x * x + b_ * x + c_), n_); }

private:
    Int a_, b_, c_, n_;
};

/// All x in [0, n) with a*x == b (mod n): gcd(a, n) residues when
/// gcd(a, n) | b, otherwise none.
ResidueSet solve_linear(const Int& a, const Int& b, const Int& n);

/// Complete solution set through (2aX + b)^2 == D (mod 4|a|n).
ResidueSet solve_quadratic(const QuadCongruence& q);

/// Solution set through T^2 == D (mod n) and x = 2^-1 * a^-1 * (t - b).
/// Throws not_coprime unless gcd(2a, n) = 1.
ResidueSet solve_quadratic_coprime(const QuadCongruence& q);

}  // namespace quadres
