#pragma once

#include <vector>

#include "quadres/gaussian.hpp"
#include "quadres/int.hpp"

namespace quadres {

/// Primitive Pythagorean triple s^2 + t^2 = r^2 with s = 2mn even.
struct PythTriple {
    Int s, t, r;
    Int m, n;

    bool operator==(const PythTriple&) const = default;
};

/// Solution of x^2 + y^2 = c z^2 with c / d3^2 = 2^g (u^2 + v^2). Every
/// primitive solution arises this way, but not every admissible parameter
/// set gives a primitive one (r sharing a prime with c, or g = 1 with u, v
/// both odd), so primitivity is computed.
struct CZ2Solution {
    Int x, y, z;
    Int c, d3;
    unsigned g = 0;
    Int u, v;
    bool primitive = false;
};

/// x + iy = (a + ib)^l, z = a^2 + b^2, so x^2 + y^2 = z^l.
struct ZlSolution {
    Int x, y, z;
    unsigned l = 2;
    Int a, b;
};

/// x^2 + y^2 + z^2 = w^2 generated from (m, n, u, v). primitive is
/// computed, not assumed: admissible parameters may still give a common
/// factor.
struct PythQuadruple {
    Int x, y, z, w;
    Int m, n, u, v;
    bool primitive = false;
};

/// Throws bad_parameters unless m > n > 0, gcd(m, n) = 1, opposite parity.
PythTriple pyth_triple(const Int& m, const Int& n);

/// Every primitive triple with r <= r_max, ordered by (r, s).
std::vector<PythTriple> enumerate_primitive_triples(const Int& r_max);

bool cz2_solvable(const Int& c);

/// Throws bad_parameters when d3^2 does not divide c, when c / d3^2 is not
/// 2^g (u^2 + v^2) with u > v >= 0 coprime, or when gcd(r, d3) != 1.
CZ2Solution cz2_solution(const Int& c, const Int& d3, const Int& u, const Int& v, unsigned g,
                         const PythTriple& triple);

/// Throws bad_parameters unless gcd(a, b) = 1, a > b > 0, opposite parity,
/// and l >= 2.
ZlSolution zl_solution(unsigned l, const Int& a, const Int& b);

/// V_n(X, Y) = sum_{j=0..n} (-1)^j C(2n+1, 2j) X^(2(n-j)) Y^(2j).
Int vn_poly(unsigned n, const Int& x, const Int& y);

/// R_n(X, Y) = sum over odd j <= n of C(2n+1, 2j) X^(2(n-j)) Y^(2j-1), the
/// companion with (X+Y)^(2n+1) + (X-Y)^(2n+1) = 2X V_n + 4XY R_n.
Int rn_poly(unsigned n, const Int& x, const Int& y);

/// Throws bad_parameters unless gcd(m, n, u, v) = 1 and (m, v) or (n, u)
/// have opposite parity.
PythQuadruple pyth_quadruple(const Int& m, const Int& n, const Int& u, const Int& v);

/// Primitive quadruples with 0 < w <= w_max in canonical form
/// 0 <= x <= y <= z, ordered by (w, x, y, z). Each carries the first
/// parameter tuple that produced it.
std::vector<PythQuadruple> enumerate_quadruples(const Int& w_max);

Int binomial(unsigned n, unsigned k);

}  // namespace quadres
