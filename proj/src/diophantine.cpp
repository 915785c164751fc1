#include "quadres/diophantine.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <tuple>

#include "quadres/core_arith.hpp"
#include "quadres/error.hpp"
#include "quadres/two_squares.hpp"

namespace quadres {
namespace {

[[noreturn]] void bad(const std::string& what) { throw MathError(Errc::bad_parameters, what); }

bool opposite_parity(const Int& a, const Int& b) { return is_even(a) != is_even(b); }

}  // namespace

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (unsigned j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

PythTriple pyth_triple(const Int& m, const Int& n) {
    if (!(m > n && n > 0)) bad("need m > n > 0");
    if (gcd(m, n) != 1) bad("m and n must be coprime");
    if (!opposite_parity(m, n)) bad("m and n must have opposite parity");
    return {2 * m * n, m * m - n * n, m * m + n * n, m, n};
}

std::vector<PythTriple> enumerate_primitive_triples(const Int& r_max) {
    std::vector<PythTriple> out;
    for (Int m = 2; m * m + 1 <= r_max; ++m) {
        for (Int n = 1; n < m && m * m + n * n <= r_max; ++n) {
            if (gcd(m, n) != 1 || !opposite_parity(m, n)) continue;
            out.push_back(pyth_triple(m, n));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PythTriple& x, const PythTriple& y) { return std::tie(x.r, x.s) < std::tie(y.r, y.s); });
    return out;
}

bool cz2_solvable(const Int& c) {
    if (c < 1) bad("c must be >= 1");
    return is_sum_of_two_squares(c);
}

CZ2Solution cz2_solution(const Int& c, const Int& d3, const Int& u, const Int& v, unsigned g,
                         const PythTriple& triple) {
    if (c < 1 || d3 < 1) bad("c and d3 must be positive");
    if (g > 1) bad("g must be 0 or 1");
    if (c % (d3 * d3) != 0) bad("d3^2 must divide c");
    if (!(u > v && v >= 0)) bad("need u > v >= 0");
    if (gcd(u, v) != 1) bad("u and v must be coprime");
    if (c / (d3 * d3) != (Int(1) << g) * (u * u + v * v)) bad("c / d3^2 != 2^g (u^2 + v^2)");
    const auto& [s, t, r, m, n] = triple;
    if (s * s + t * t != r * r || r <= 0) bad("not a Pythagorean triple");
    if (gcd(r, d3) != 1) bad("gcd(r, d3) must be 1");

    CZ2Solution out{0, 0, r, c, d3, g, u, v, false};
    if (g == 0) {
        out.x = d3 * (t * u - s * v);
        out.y = d3 * (s * u + t * v);
    } else {
        out.x = d3 * ((s + t) * u - (s - t) * v);
        out.y = d3 * ((s - t) * u + (s + t) * v);
    }
    out.primitive = gcd(gcd(out.x, out.y), out.z) == 1;
    return out;
}

ZlSolution zl_solution(unsigned l, const Int& a, const Int& b) {
    if (l < 2) bad("l must be >= 2");
    if (!(a > b && b > 0)) bad("need a > b > 0");
    if (gcd(a, b) != 1) bad("a and b must be coprime");
    if (!opposite_parity(a, b)) bad("a and b must have opposite parity");
    const GaussianInt power = pow(GaussianInt(a, b), l);
    return {power.re, power.im, a * a + b * b, l, a, b};
}

Int vn_poly(unsigned n, const Int& x, const Int& y) {
    Int sum = 0;
    for (unsigned j = 0; j <= n; ++j) {
        Int term = binomial(2 * n + 1, 2 * j) * pow(x, 2 * (n - j)) * pow(y, 2 * j);
        if (j % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

Int rn_poly(unsigned n, const Int& x, const Int& y) {
    Int sum = 0;
    for (unsigned j = 1; j <= n; j += 2) sum += binomial(2 * n + 1, 2 * j) * pow(x, 2 * (n - j)) * pow(y, 2 * j - 1);
    return sum;
}

PythQuadruple pyth_quadruple(const Int& m, const Int& n, const Int& u, const Int& v) {
    if (gcd(gcd(m, n), gcd(u, v)) != 1) bad("gcd(m, n, u, v) must be 1");
    if (!opposite_parity(m, v) && !opposite_parity(n, u)) bad("(m, v) or (n, u) must have opposite parity");
    PythQuadruple q{2 * (m * n - u * v),
                    m * m - n * n - u * u + v * v,
                    2 * (m * u + n * v),
                    m * m + n * n + u * u + v * v,
                    m, n, u, v, false};
    q.primitive = gcd(gcd(q.x, q.y), q.z) == 1;
    return q;
}

std::vector<PythQuadruple> enumerate_quadruples(const Int& w_max) {
    if (w_max < 1) return {};
    // Each squared parameter is at most w <= w_max.
    const auto bound = isqrt(w_max).convert_to<long long>();
    using Key = std::tuple<Int, Int, Int, Int>;  // (w, x, y, z)
    std::map<Key, PythQuadruple> found;

    for (long long m = -bound; m <= bound; ++m)
        for (long long n = -bound; n <= bound; ++n)
            for (long long u = -bound; u <= bound; ++u)
                for (long long v = -bound; v <= bound; ++v) {
                    const long long w = m * m + n * n + u * u + v * v;
                    if (w == 0 || w > w_max) continue;
                    const long long x = 2 * (m * n - u * v);
                    const long long y = m * m - n * n - u * u + v * v;
                    const long long z = 2 * (m * u + n * v);
                    if (std::gcd(std::gcd(x, y), z) != 1) continue;
                    // (0, 0, 1, 1) is not counted as a quadruple.
                    if ((x == 0) + (y == 0) + (z == 0) >= 2) continue;
                    std::array<long long, 3> xyz{std::llabs(x), std::llabs(y), std::llabs(z)};
                    std::sort(xyz.begin(), xyz.end());
                    Key key{w, xyz[0], xyz[1], xyz[2]};
                    if (found.contains(key)) continue;
                    found.emplace(key, PythQuadruple{xyz[0], xyz[1], xyz[2], w, m, n, u, v, true});
                }

    std::vector<PythQuadruple> out;
    out.reserve(found.size());
    for (auto& [key, q] : found) out.push_back(std::move(q));
    return out;
}

}  // namespace quadres
