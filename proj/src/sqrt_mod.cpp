#include "quadres/sqrt_mod.hpp"

#include <algorithm>

#include "quadres/error.hpp"
#include "quadres/symbols.hpp"

namespace quadres {
namespace {

void require_coprime(const Int& a, const Int& n) {
    if (gcd(a, n) != 1) throw MathError(Errc::not_coprime, to_string(a) + " and " + to_string(n));
}

ResidueSet pair_set(const Int& x, const Int& modulus) {
    Int lo = mod(x, modulus), hi = mod(Int(-x), modulus);
    if (lo > hi) std::swap(lo, hi);
    if (lo == hi) return {modulus, {lo}};
    return {modulus, {lo, hi}};
}

// p == 1 (mod 4); a is a known residue.
Int tonelli_shanks(const Int& a, const Int& p) {
    Int q = p - 1;
    unsigned s = 0;
    while (is_even(q)) {
        q >>= 1;
        ++s;
    }
    Int z = 2;
    while (legendre_euler(z, p) != Symbol::negative) ++z;

    Int c = mod_pow(z, q, p);
    Int x = mod_pow(a, (q + 1) / 2, p);
    Int t = mod_pow(a, q, p);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        Int t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        Int b = c;
        for (unsigned j = 0; j + 1 < m - i; ++j) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

ResidueSet prime_power_roots_coprime(const Int& a, const Int& p, unsigned e) {
    if (p == 2) return sqrt_mod_2e(a, e);
    return lift_odd_prime_power(a, p, e);
}

}  // namespace

namespace detail {

std::optional<Int> prime_root_by_search(const Int& a, const Int& p) {
    const Int target = mod(a, p);
    const Int half = (p - 1) / 2;
    for (Int b = 1; b <= half; ++b)
        if (b * b % p == target) return b;
    return std::nullopt;
}

}  // namespace detail

ResidueSet sqrt_mod_prime(const Int& a, const Int& p) {
    const Symbol s = legendre_euler(a, p);
    if (s == Symbol::zero) throw MathError(Errc::not_coprime, to_string(a) + " and " + to_string(p));
    if (s == Symbol::negative) return {p, {}};
    const Int r = mod(a, p);
    if (p % 4 == 3) return pair_set(mod_pow(r, (p + 1) / 4, p), p);
    return pair_set(tonelli_shanks(r, p), p);
}

ResidueSet lift_odd_prime_power(const Int& a, const Int& p, unsigned e) {
    if (e < 1) throw MathError(Errc::invalid_argument, "exponent must be >= 1");
    ResidueSet base = sqrt_mod_prime(a, p);
    if (base.empty()) return {pow(p, e), {}};

    Int x = base.residues.front();
    Int pk = p;
    for (unsigned k = 1; k < e; ++k) {
        // x^2 = a + l*p^k; the correction y solves 2x*Y == -l (mod p).
        const Int l = (x * x - a) / pk;
        const Int y = mod(Int(-l) * mod_inverse(2 * x, p), p);
        x += y * pk;
        pk *= p;
    }
    return pair_set(x, pk);
}

ResidueSet sqrt_mod_2e(const Int& a, unsigned e) {
    if (is_even(a)) throw MathError(Errc::even_argument, to_string(a));
    if (e < 1) throw MathError(Errc::invalid_argument, "exponent must be >= 1");
    const Int modulus = Int(1) << e;
    if (e == 1) return {modulus, {1}};
    if (e == 2) {
        if (mod(a, 4) != 1) return {modulus, {}};
        return {modulus, {1, 3}};
    }
    if (mod(a, 8) != 1) return {modulus, {}};

    Int x = 1;
    for (unsigned k = 3; k < e; ++k) {
        // x^2 = a + l*2^k; x odd, so x*Y == -l (mod 2) gives Y = l mod 2.
        const Int l = (x * x - a) >> k;
        if (!is_even(l)) x += Int(1) << (k - 1);
    }
    const Int half = modulus >> 1;
    std::vector<Int> roots{mod(x, modulus), mod(Int(-x), modulus), mod(Int(x + half), modulus),
                           mod(Int(half - x), modulus)};
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return {modulus, std::move(roots)};
}

ResidueSet sqrt_mod(const Int& a, const Int& n) {
    if (n < 1) throw MathError(Errc::invalid_argument, "modulus must be >= 1");
    require_coprime(a, n);
    if (n == 1) return {1, {0}};

    std::vector<CrtComponent> components;
    for (const auto& [p, e] : factorize(n).factors) {
        ResidueSet part = prime_power_roots_coprime(a, p, e);
        if (part.empty()) return {n, {}};
        components.push_back({std::move(part.modulus), std::move(part.residues)});
    }
    return crt_combine(components);
}

bool is_quadratic_residue(const Int& a, const Int& n) {
    if (n < 1) throw MathError(Errc::invalid_argument, "modulus must be >= 1");
    require_coprime(a, n);
    for (const auto& [p, e] : factorize(n).factors) {
        if (p == 2) {
            if (e == 2 && mod(a, 4) != 1) return false;
            if (e >= 3 && mod(a, 8) != 1) return false;
        } else if (legendre_euler(a, p) != Symbol::positive) {
            return false;
        }
    }
    return true;
}

ResidueSet sqrt_mod_general(const Int& a, const Int& n) {
    if (n < 1) throw MathError(Errc::invalid_argument, "modulus must be >= 1");
    if (n == 1) return {1, {0}};

    std::vector<CrtComponent> components;
    for (const auto& [p, e] : factorize(n).factors) {
        const Int pe = pow(p, e);
        const Int d = mod(a, pe);
        std::vector<Int> roots;
        if (d == 0) {
            // x == 0 (mod p^ceil(e/2)).
            const Int step = pow(p, (e + 1) / 2);
            for (Int x = 0; x < pe; x += step) roots.push_back(x);
        } else {
            unsigned k = 0;
            Int unit = d;
            while (unit % p == 0) {
                unit /= p;
                ++k;
            }
            if (k % 2 == 1) return {n, {}};
            // x = p^h * y with p not dividing y, y^2 == unit (mod p^(e-k)),
            // and y only matters modulo p^(e-h).
            const unsigned h = k / 2;
            const ResidueSet inner = prime_power_roots_coprime(unit, p, e - k);
            if (inner.empty()) return {n, {}};
            const Int ph = pow(p, h);
            for (const Int& y0 : inner.residues)
                for (Int j = 0; j < ph; ++j) roots.push_back(mod(Int(ph * (y0 + j * inner.modulus)), pe));
            std::sort(roots.begin(), roots.end());
        }
        components.push_back({pe, std::move(roots)});
    }
    return crt_combine(components);
}

}  // namespace quadres
