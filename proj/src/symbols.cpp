#include "quadres/symbols.hpp"

#include "quadres/core_arith.hpp"
#include "quadres/error.hpp"

namespace quadres {
namespace {

void require_odd_prime(const Int& p) {
    if (p < 3 || is_even(p) || !is_prime(p))
        throw MathError(Errc::not_odd_prime, to_string(p));
}

Symbol flip_if(bool negate, Symbol s) { return negate ? Symbol::negative * s : s; }

}  // namespace

Symbol legendre_euler(const Int& a, const Int& p) {
    require_odd_prime(p);
    const Int r = mod_pow(a, (p - 1) / 2, p);
    if (r == 0) return Symbol::zero;
    return r == 1 ? Symbol::positive : Symbol::negative;
}

Symbol legendre_gauss_lemma(const Int& a, const Int& p) {
    require_odd_prime(p);
    const Int step = mod(a, p);
    if (step == 0) throw MathError(Errc::not_coprime, to_string(a) + " and " + to_string(p));

    const Int half = (p - 1) / 2;
    // k*a mod p walks by repeated addition; a residue above p/2 has a
    // negative minimal representative.
    Int residue = 0;
    bool odd_count = false;
    for (Int k = 1; k <= half; ++k) {
        residue += step;
        if (residue >= p) residue -= p;
        if (residue > half) odd_count = !odd_count;
    }
    return odd_count ? Symbol::negative : Symbol::positive;
}

Symbol jacobi(const Int& a_in, const Int& n_in) {
    Int n = abs(n_in);
    if (is_even(n)) throw MathError(Errc::even_modulus, to_string(n_in));

    Int a = mod(a_in, n);
    Symbol result = Symbol::positive;
    while (a != 0) {
        // (2/n) = (-1)^((n^2-1)/8): -1 exactly when n = 3, 5 (mod 8).
        unsigned twos = 0;
        while (is_even(a)) {
            a >>= 1;
            ++twos;
        }
        if (twos % 2 == 1) {
            const unsigned r8 = static_cast<unsigned>(n % 8);
            result = flip_if(r8 == 3 || r8 == 5, result);
        }
        // Reciprocity for odd coprime-or-not a, n: the sign flips when both
        // are 3 (mod 4). A shared factor surfaces as a final n != 1.
        std::swap(a, n);
        result = flip_if(a % 4 == 3 && n % 4 == 3, result);
        a = mod(a, n);
    }
    return n == 1 ? result : Symbol::zero;
}

Symbol jacobi_by_definition(const Int& a, const Int& n_in) {
    const Int n = abs(n_in);
    if (is_even(n)) throw MathError(Errc::even_modulus, to_string(n_in));
    if (n == 1) return Symbol::positive;

    Symbol result = Symbol::positive;
    for (const auto& [p, e] : factorize(n).factors) {
        const Symbol s = legendre_euler(a, p);
        if (s == Symbol::zero) return Symbol::zero;
        if (s == Symbol::negative && e % 2 == 1) result = Symbol::negative * result;
    }
    return result;
}

}  // namespace quadres
