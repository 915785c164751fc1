#include "quadres/oracle.hpp"

#include <algorithm>

#include "quadres/error.hpp"

namespace quadres::oracle {
namespace {

void check_budget(const Int& steps, const char* what) {
    if (steps > kScanBudget)
        throw MathError(Errc::budget_exceeded, std::string(what) + " would scan " + to_string(steps) + " candidates");
}

Int residue(const Int& a, const Int& n) {
    Int r = a % n;
    return r < 0 ? Int(r + n) : r;
}

}  // namespace

bool brute_is_prime(const Int& n) {
    if (n < 2) return false;
    check_budget(Int(boost::multiprecision::sqrt(n)), "primality scan");
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

ResidueSet brute_sqrt_mod(const Int& a, const Int& n) {
    if (n < 1) throw MathError(Errc::invalid_argument, "modulus must be >= 1");
    check_budget(n, "sqrt scan");
    const Int target = residue(a, n);
    ResidueSet out{n, {}};
    for (Int x = 0; x < n; ++x)
        if (x * x % n == target) out.residues.push_back(x);
    return out;
}

ResidueSet brute_quadratic(const Int& a, const Int& b, const Int& c, const Int& n) {
    if (n < 1) throw MathError(Errc::invalid_argument, "modulus must be >= 1");
    check_budget(n, "quadratic scan");
    ResidueSet out{n, {}};
    for (Int x = 0; x < n; ++x)
        if ((a * x * x + b * x + c) % n == 0) out.residues.push_back(x);
    return out;
}

std::vector<TwoSquareRep> brute_two_squares(const Int& n) {
    std::vector<TwoSquareRep> out;
    if (n < 0) return out;
    const Int bound = boost::multiprecision::sqrt(n);
    check_budget(Int(2 * bound + 1), "lattice scan");
    for (Int x = -bound; x <= bound; ++x) {
        const Int rest = n - x * x;
        const Int y = boost::multiprecision::sqrt(rest);
        if (y * y != rest) continue;
        Int g = boost::multiprecision::gcd(x < 0 ? Int(-x) : x, y);
        out.push_back({x, -y, g == 1});
        if (y != 0) out.push_back({x, y, g == 1});
    }
    std::sort(out.begin(), out.end(), [](const TwoSquareRep& l, const TwoSquareRep& r) {
        return l.a != r.a ? l.a < r.a : l.b < r.b;
    });
    return out;
}

Symbol brute_legendre(const Int& a, const Int& p) {
    if (p < 3 || p % 2 == 0 || !brute_is_prime(p)) throw MathError(Errc::not_odd_prime, to_string(p));
    check_budget(p, "legendre scan");
    const Int target = residue(a, p);
    if (target == 0) return Symbol::zero;
    for (Int x = 1; x < p; ++x)
        if (x * x % p == target) return Symbol::positive;
    return Symbol::negative;
}

Symbol brute_jacobi(const Int& a, const Int& n_in) {
    Int n = n_in < 0 ? Int(-n_in) : n_in;
    if (n % 2 == 0) throw MathError(Errc::even_modulus, to_string(n_in));
    check_budget(n, "jacobi scan");
    Symbol result = Symbol::positive;
    for (Int d = 3; n > 1; d += 2) {
        while (n % d == 0) {
            n /= d;
            result = result * brute_legendre(a, d);
        }
    }
    return result;
}

}  // namespace quadres::oracle
