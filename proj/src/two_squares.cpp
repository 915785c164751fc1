#include "quadres/two_squares.hpp"

#include <algorithm>

#include "quadres/core_arith.hpp"
#include "quadres/error.hpp"
#include "quadres/gaussian.hpp"
#include "quadres/sqrt_mod.hpp"

namespace quadres {
namespace {

TwoSquareRep orient_to_root(const Int& k, const Int& n, const Int& x, const Int& y) {
    if (mod(Int(k * x - y), n) == 0) return make_rep(x, y);
    if (mod(Int(k * y - x), n) == 0) return make_rep(y, x);
    throw MathError(Errc::invalid_argument, "pair does not match root class");
}

// Odd divisors of n (n >= 1), unsorted.
std::vector<Int> odd_divisors(const Int& n) {
    std::vector<Int> divisors{1};
    for (const auto& [p, e] : factorize(n).factors) {
        if (p == 2) continue;
        const std::size_t count = divisors.size();
        Int power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t j = 0; j < count; ++j) divisors.push_back(divisors[j] * power);
        }
    }
    return divisors;
}

}  // namespace

TwoSquareRep make_rep(Int a, Int b) {
    const bool primitive = gcd(a, b) == 1;
    return {std::move(a), std::move(b), primitive};
}

bool lex_less(const TwoSquareRep& x, const TwoSquareRep& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

bool is_sum_of_two_squares(const Int& n) {
    if (n < 0) return false;
    if (n == 0) return true;
    for (const auto& [p, e] : factorize(n).factors)
        if (p % 4 == 3 && e % 2 == 1) return false;
    return true;
}

bool has_primitive_representation(const Int& n) {
    if (n < 1) return false;
    if (n % 4 == 0) return false;
    for (const auto& [p, e] : factorize(n).factors)
        if (p != 2 && p % 4 != 1) return false;
    return true;
}

TwoSquareRep represent_prime(const Int& p) {
    if (!is_prime(p)) throw MathError(Errc::invalid_argument, to_string(p) + " is not prime");
    if (p == 2) return make_rep(1, 1);
    if (p % 4 == 3) throw MathError(Errc::wrong_residue_class, to_string(p) + " == 3 (mod 4)");

    const Int k = sqrt_mod_prime(-1, p).residues.front();
    TwoSquareRep rep = rep_from_root(k, p);
    if (rep.a < rep.b) std::swap(rep.a, rep.b);
    return rep;
}

TwoSquareRep rep_from_root(const Int& k, const Int& n) {
    if (n < 2) throw MathError(Errc::invalid_argument, "modulus must be >= 2");
    if (mod(Int(k * k + 1), n) != 0)
        throw MathError(Errc::not_a_root, to_string(k) + "^2 != -1 mod " + to_string(n));

    if (n > detail::kGridSearchLimit) return detail::rep_from_root_by_descent(k, n);

    const auto modulus = n.convert_to<std::uint64_t>();
    const auto k_red = mod(k, n).convert_to<std::uint64_t>();
    const std::uint64_t side = isqrt(n).convert_to<std::uint64_t>() + 1;

    // slot[r] holds x*side + y + 1 of the first grid point with k*x - y == r.
    std::vector<std::uint32_t> slot(modulus, 0);
    for (std::uint64_t x = 0; x < side; ++x) {
        for (std::uint64_t y = 0; y < side; ++y) {
            const std::uint64_t r = (k_red * x % modulus + modulus - y % modulus) % modulus;
            if (slot[r] == 0) {
                slot[r] = static_cast<std::uint32_t>(x * side + y + 1);
                continue;
            }
            const std::uint64_t x1 = (slot[r] - 1) / side, y1 = (slot[r] - 1) % side;
            const Int x0 = Int(x) - Int(x1);  // >= 0 by scan order, and in fact > 0
            const Int y0 = Int(y) - Int(y1);
            // Same signs: (x0, y0). Opposite signs: k*(-y0) == x0, so swap.
            TwoSquareRep rep = y0 > 0 ? make_rep(x0, y0) : make_rep(Int(-y0), x0);
            if (rep.value() != n) throw MathError(Errc::invalid_argument, "grid collision is not a representation");
            return rep;
        }
    }
    throw MathError(Errc::invalid_argument, "no grid collision");  // excluded by pigeonhole
}

namespace detail {

TwoSquareRep rep_from_root_by_descent(const Int& k, const Int& n) {
    Int r0 = n, r1 = mod(k, n);
    if (r1 > n / 2) r1 = n - r1;
    while (r1 * r1 > n) {
        Int r2 = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    const Int rest = n - r1 * r1;
    const Int s = isqrt(rest);
    if (s * s != rest) throw MathError(Errc::invalid_argument, "descent did not terminate in a representation");
    return orient_to_root(k, n, r1, s);
}

}  // namespace detail

Int count_representations(const Int& n) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    Int d1 = 0, d3 = 0;
    for (const Int& d : odd_divisors(n)) {
        if (d % 4 == 1)
            ++d1;
        else
            ++d3;
    }
    return 4 * (d1 - d3);
}

Int count_representations_by_factorization(const Int& n) {
    if (n < 1) throw MathError(Errc::invalid_argument, "n must be >= 1");
    Int r = 4;
    for (const auto& [p, e] : factorize(n).factors) {
        if (p % 4 == 1) r *= 1 + e;
        if (p % 4 == 3 && e % 2 == 1) return 0;
    }
    return r;
}

std::vector<TwoSquareRep> all_representations(const Int& n) {
    if (n < 0) return {};
    if (n == 0) return {make_rep(0, 0)};

    // A + iB = unit * (1+i)^g * prod pi^e' conj(pi)^(e-e') * prod q^(f/2).
    // Splitting g across (1+i) and (1-i) only changes the unit, so g stays
    // on (1+i).
    std::vector<GaussianInt> partial{GaussianInt{1}};
    for (const auto& [p, e] : factorize(n).factors) {
        std::vector<GaussianInt> next;
        if (p == 2) {
            for (const auto& z : partial) next.push_back(z * pow(GaussianInt(1, 1), e));
        } else if (p % 4 == 3) {
            if (e % 2 == 1) return {};
            for (const auto& z : partial) next.push_back(z * pow(GaussianInt(p), e / 2));
        } else {
            const TwoSquareRep rep = represent_prime(p);
            const GaussianInt pi(rep.a, rep.b);
            for (const auto& z : partial)
                for (unsigned split = 0; split <= e; ++split)
                    next.push_back(z * pow(pi, split) * pow(pi.conj(), e - split));
        }
        partial = std::move(next);
    }

    std::vector<TwoSquareRep> reps;
    reps.reserve(partial.size() * 4);
    for (const auto& z : partial)
        for (const auto& w : associates(z)) reps.push_back(make_rep(w.re, w.im));
    std::sort(reps.begin(), reps.end(), lex_less);
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

std::vector<TwoSquareRep> primitive_representations(const Int& n) {
    if (!has_primitive_representation(n)) return {};

    std::vector<GaussianInt> partial{GaussianInt{1}};
    for (const auto& [p, e] : factorize(n).factors) {
        std::vector<GaussianInt> next;
        if (p == 2) {
            for (const auto& z : partial) next.push_back(z * GaussianInt(1, -1));
        } else {
            const TwoSquareRep rep = represent_prime(p);
            const GaussianInt pi(rep.a, rep.b);
            for (const auto& z : partial) {
                next.push_back(z * pow(pi, e));
                next.push_back(z * pow(pi.conj(), e));
            }
        }
        partial = std::move(next);
    }

    std::vector<TwoSquareRep> reps;
    reps.reserve(partial.size());
    for (const auto& z : partial) {
        const GaussianInt c = canonical_associate(z);
        reps.push_back(make_rep(c.re, c.im));
    }
    std::sort(reps.begin(), reps.end(), lex_less);
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

}  // namespace quadres
