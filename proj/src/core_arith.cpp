#include "quadres/core_arith.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "quadres/error.hpp"

namespace quadres {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::not_invertible: return "NotInvertible";
        case Errc::non_coprime_moduli: return "NonCoprimeModuli";
        case Errc::not_odd_prime: return "NotOddPrime";
        case Errc::not_coprime: return "NotCoprime";
        case Errc::even_modulus: return "EvenModulus";
        case Errc::even_argument: return "EvenArgument";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::both_zero: return "BothZero";
        case Errc::zero_argument: return "ZeroArgument";
        case Errc::zero_or_unit: return "ZeroOrUnit";
        case Errc::wrong_residue_class: return "WrongResidueClass";
        case Errc::not_a_root: return "NotARoot";
        case Errc::bad_parameters: return "BadParameters";
        case Errc::linear_congruence: return "LinearCongruence";
        case Errc::budget_exceeded: return "BudgetExceeded";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

std::optional<Int> parse_int(std::string_view text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) return std::nullopt;
    Int value = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        value = value * 10 + (c - '0');
    }
    return negative ? Int(-value) : value;
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
    Int old_r = abs(a), r = abs(b);
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        const Int q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r == 0) return {0, 0, 0};
    // Coefficients were computed for |a|, |b|.
    if (a < 0) old_s = -old_s;
    if (b < 0) old_t = -old_t;
    return {old_r, old_s, old_t};
}

Int gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(abs(a), abs(b));
}

Int mod_inverse(const Int& a, const Int& n) {
    if (n < 2) throw MathError(Errc::invalid_argument, "modulus must be >= 2");
    const ExtGcd r = ext_gcd(mod(a, n), n);
    if (r.g != 1)
        throw MathError(Errc::not_invertible, to_string(a) + " mod " + to_string(n));
    return mod(r.s, n);
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod64(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 powmod64(u64 a, u64 e, u64 n) {
    u64 result = 1 % n;
    a %= n;
    while (e != 0) {
        if (e & 1) result = mulmod64(result, a, n);
        a = mulmod64(a, a, n);
        e >>= 1;
    }
    return result;
}

bool miller_rabin64(u64 n) {
    if (n < 2) return false;
    static constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : bases) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 base : bases) {
        u64 x = powmod64(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool miller_rabin(const Int& n) {
    static constexpr std::array<unsigned, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned p : bases) {
        if (n % p == 0) return n == p;
    }
    Int d = n - 1;
    unsigned s = 0;
    while (is_even(d)) {
        d >>= 1;
        ++s;
    }
    for (unsigned base : bases) {
        Int x = mod_pow(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's variant of Pollard rho; returns a non-trivial factor of the odd
// composite n. Seeds are fixed, so the result is deterministic.
Int pollard_brent(const Int& n) {
    for (unsigned c = 1;; ++c) {
        Int y = 2, x, ys, q = 1, g = 1;
        unsigned r = 1;
        constexpr unsigned m = 64;
        auto f = [&](const Int& v) { return (v * v + c) % n; };
        do {
            x = y;
            for (unsigned i = 0; i < r; ++i) y = f(y);
            unsigned k = 0;
            do {
                ys = y;
                for (unsigned i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = q * abs(Int(x - y)) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(Int(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const Int d = pollard_brent(n);
    split_into(d, out);
    split_into(n / d, out);
}

constexpr u64 kTrialLimit = 1'000'000;

}  // namespace

Int mod_pow(const Int& a, const Int& e, const Int& n) {
    if (e < 0) throw MathError(Errc::invalid_argument, "negative exponent");
    if (n < 1) throw MathError(Errc::invalid_argument, "modulus must be >= 1");
    if (n == 1) return 0;
    if (auto n64 = to_u64(n); n64) {
        if (auto e64 = to_u64(e); e64) {
            const u64 base = mod(a, n).convert_to<u64>();
            return Int(powmod64(base, *e64, *n64));
        }
    }
    return boost::multiprecision::powm(mod(a, n), e, n);
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (auto n64 = to_u64(n); n64) return miller_rabin64(*n64);
    return miller_rabin(n);
}

Int pow(const Int& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

Int isqrt(const Int& n) {
    if (n < 0) throw MathError(Errc::invalid_argument, "isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

Int Factorization::value() const {
    Int v = sign;
    for (const auto& [p, e] : factors) v *= pow(p, e);
    return v;
}

Factorization factorize(const Int& n) {
    if (n == 0) throw MathError(Errc::zero_argument, "cannot factor 0");
    Factorization result;
    result.sign = n < 0 ? -1 : 1;
    std::map<Int, unsigned> primes;
    Int rest = abs(n);

    if (auto r64 = to_u64(rest); r64) {
        u64 m = *r64;
        auto strip = [&](u64 p) {
            unsigned e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (e != 0) primes[Int(p)] = e;
        };
        strip(2);
        strip(3);
        for (u64 p = 5; p <= kTrialLimit && p * p <= m; p += 6) {
            strip(p);
            strip(p + 2);
        }
        rest = m;
    } else {
        for (unsigned p = 2; p <= kTrialLimit && Int(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
            unsigned e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            if (e != 0) primes[Int(p)] = e;
        }
    }
    split_into(rest, primes);

    result.factors.reserve(primes.size());
    for (const auto& [p, e] : primes) result.factors.push_back({p, e});
    return result;
}

ResidueSet crt_combine(std::span<const CrtComponent> components) {
    if (components.empty()) throw MathError(Errc::invalid_argument, "no CRT components");
    Int total = 1;
    for (const auto& c : components) {
        if (c.modulus < 1) throw MathError(Errc::invalid_argument, "modulus must be >= 1");
        if (gcd(total, c.modulus) != 1)
            throw MathError(Errc::non_coprime_moduli, "modulus " + to_string(c.modulus));
        total *= c.modulus;
    }

    // Idempotent basis: basis_i == 1 (mod m_i), 0 (mod m_j), j != i.
    std::vector<Int> basis;
    basis.reserve(components.size());
    for (const auto& c : components) {
        const Int cofactor = total / c.modulus;
        const Int inverse = c.modulus == 1 ? Int(0) : mod_inverse(cofactor, c.modulus);
        basis.push_back(cofactor * inverse);
    }

    std::vector<Int> acc{0};
    for (std::size_t i = 0; i < components.size(); ++i) {
        std::vector<Int> next;
        next.reserve(acc.size() * components[i].residues.size());
        for (const Int& partial : acc)
            for (const Int& r : components[i].residues) next.push_back(partial + mod(r, components[i].modulus) * basis[i]);
        acc = std::move(next);
    }
    for (Int& r : acc) r = mod(r, total);
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return {total, std::move(acc)};
}

}  // namespace quadres
