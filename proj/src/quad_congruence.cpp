#include "quadres/quad_congruence.hpp"

#include <algorithm>

#include "quadres/error.hpp"
#include "quadres/sqrt_mod.hpp"

namespace quadres {

QuadCongruence::QuadCongruence(Int a, Int b, Int c, Int n)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), n_(std::move(n)) {
    if (n_ < 2) throw MathError(Errc::invalid_argument, "modulus must be >= 2");
    if (mod(a_, n_) == 0)
        throw MathError(Errc::linear_congruence,
                        "leading coefficient vanishes mod " + to_string(n_) + "; use solve_linear");
}

ResidueSet solve_linear(const Int& a, const Int& b, const Int& n) {
    if (n < 1) throw MathError(Errc::invalid_argument, "modulus must be >= 1");
    const Int g = gcd(a, n);
    if (g == 0 || mod(b, g) != 0) return {n, {}};

    const Int reduced_n = n / g;
    const Int x0 = reduced_n == 1 ? Int(0) : mod(Int((b / g) * mod_inverse(a / g, reduced_n)), reduced_n);
    ResidueSet out{n, {}};
    out.residues.reserve(static_cast<std::size_t>(g));
    for (Int k = 0; k < g; ++k) out.residues.push_back(x0 + k * reduced_n);
    return out;
}

ResidueSet solve_quadratic(const QuadCongruence& q) {
    const Int& a = q.a();
    const Int& b = q.b();
    const Int& n = q.n();
    const Int two_a = 2 * abs(a);
    const Int big_modulus = 4 * abs(a) * n;

    // sqrt_mod_general covers gcd(D, 4|a|n) > 1, including D = 0.
    const ResidueSet roots = sqrt_mod_general(q.discriminant(), big_modulus);

    std::vector<Int> solutions;
    for (const Int& t : roots.residues) {
        if (mod(Int(t - b), two_a) != 0) continue;
        for (const Int& x : solve_linear(2 * a, t - b, big_modulus).residues) solutions.push_back(mod(x, n));
    }
    std::sort(solutions.begin(), solutions.end());
    solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
    return {n, std::move(solutions)};
}

ResidueSet solve_quadratic_coprime(const QuadCongruence& q) {
    const Int& n = q.n();
    if (gcd(2 * q.a(), n) != 1)
        throw MathError(Errc::not_coprime, "gcd(2a, n) != 1 for n = " + to_string(n));

    const ResidueSet roots = sqrt_mod_general(q.discriminant(), n);
    const Int half = (n + 1) / 2;  // inverse of 2 modulo odd n
    const Int a_inv = mod_inverse(q.a(), n);
    std::vector<Int> solutions;
    solutions.reserve(roots.size());
    for (const Int& t : roots.residues) solutions.push_back(mod(Int(half * a_inv * (t - q.b())), n));
    std::sort(solutions.begin(), solutions.end());
    return {n, std::move(solutions)};
}

}  // namespace quadres
