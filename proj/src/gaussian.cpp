#include "quadres/gaussian.hpp"

#include <algorithm>
#include <sstream>

#include "quadres/error.hpp"
#include "quadres/two_squares.hpp"

namespace quadres {

bool norm_order(const GaussianInt& a, const GaussianInt& b) {
    const Int na = norm(a), nb = norm(b);
    if (na != nb) return na < nb;
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

std::string to_string(const GaussianInt& z) {
    std::ostringstream os;
    auto imag_part = [&](const Int& im) {
        const Int m = abs(im);
        if (m != 1) os << m;
        os << 'i';
    };
    if (z.im == 0) {
        os << z.re;
    } else if (z.re == 0) {
        if (z.im < 0) os << '-';
        imag_part(z.im);
    } else {
        os << z.re << (z.im < 0 ? '-' : '+');
        imag_part(z.im);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& z) { return os << to_string(z); }

std::optional<GaussianInt> parse_gaussian(std::string_view text) {
    if (text.empty()) return std::nullopt;
    if (text.back() != 'i') {
        auto re = parse_int(text);
        if (!re) return std::nullopt;
        return GaussianInt(*re);
    }
    text.remove_suffix(1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = text.size(); k-- > 1;) {
        if (text[k] == '+' || text[k] == '-') {
            split = k;
            break;
        }
    }
    Int re = 0;
    std::string_view imag = text;
    if (split != std::string_view::npos) {
        auto parsed = parse_int(text.substr(0, split));
        if (!parsed) return std::nullopt;
        re = *parsed;
        imag = text.substr(split);
    }
    Int im;
    if (imag.empty() || imag == "+") {
        im = 1;
    } else if (imag == "-") {
        im = -1;
    } else {
        auto parsed = parse_int(imag);
        if (!parsed) return std::nullopt;
        im = *parsed;
    }
    return GaussianInt(re, im);
}

Int norm(const GaussianInt& z) { return z.re * z.re + z.im * z.im; }

bool is_unit(const GaussianInt& z) { return norm(z) == 1; }

GaussianInt pow(GaussianInt base, unsigned exponent) {
    GaussianInt result{1};
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

std::array<GaussianInt, 4> associates(const GaussianInt& z) {
    if (z.is_zero()) throw MathError(Errc::zero_argument, "0 has no associates");
    const GaussianInt iz = GaussianInt::i() * z;
    return {z, iz, -z, -iz};
}

GaussianInt canonical_associate(const GaussianInt& z) {
    if (z.is_zero()) return z;
    for (const GaussianInt& w : associates(z))
        if (w.re > 0 && w.im >= 0) return w;
    return z;  // unreachable
}

GaussianInt canonical_unit(const GaussianInt& z) {
    if (z.is_zero()) return GaussianInt{1};
    const GaussianInt c = canonical_associate(z);
    for (const GaussianInt& u : associates(GaussianInt{1}))
        if (u * c == z) return u;
    return GaussianInt{1};  // unreachable
}

GaussianDivRem div_rem(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw MathError(Errc::division_by_zero, "Gaussian division by 0");
    const GaussianInt num = a * b.conj();
    const Int n = norm(b);
    // Nearest integer to num/n, a fractional part of exactly 1/2 rounding
    // down: ceil(R - 1/2) == floor((2*num + n - 1) / (2n)).
    auto round = [&](const Int& v) { return floor_div(Int(2 * v + n - 1), Int(2 * n)); };
    GaussianInt q{round(num.re), round(num.im)};
    GaussianInt r = a - q * b;
    return {std::move(q), std::move(r)};
}

std::optional<GaussianInt> exact_div(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw MathError(Errc::division_by_zero, "Gaussian division by 0");
    const GaussianInt num = a * b.conj();
    const Int n = norm(b);
    if (num.re % n != 0 || num.im % n != 0) return std::nullopt;
    return GaussianInt(num.re / n, num.im / n);
}

bool divides(const GaussianInt& d, const GaussianInt& a) {
    if (d.is_zero()) return a.is_zero();
    return exact_div(a, d).has_value();
}

GaussianInt gcd(const GaussianInt& a, const GaussianInt& b) {
    if (a.is_zero() && b.is_zero()) throw MathError(Errc::both_zero, "gcd(0, 0)");
    GaussianInt x = a, y = b;
    while (!y.is_zero()) {
        GaussianInt r = div_rem(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return canonical_associate(x);
}

std::vector<Int> euclid_norm_sequence(const GaussianInt& a, const GaussianInt& b) {
    std::vector<Int> norms{norm(b)};
    GaussianInt x = a, y = b;
    while (!y.is_zero()) {
        GaussianInt r = div_rem(x, y).remainder;
        norms.push_back(norm(r));
        x = std::move(y);
        y = std::move(r);
    }
    return norms;
}

bool is_gaussian_prime(const GaussianInt& z) {
    const Int n = norm(z);
    if (is_prime(n)) return true;
    if (z.re == 0 || z.im == 0) {
        const Int q = abs(z.re) + abs(z.im);
        return q % 4 == 3 && is_prime(q);
    }
    return false;
}

GaussianInt GaussianFactorization::value() const {
    GaussianInt v = unit;
    for (const auto& [p, e] : factors) v *= pow(p, e);
    return v;
}

namespace detail {

GaussianFactorization factor_with_norm_factors(const GaussianInt& z, std::span<const PrimePower> norm_factors) {
    if (z.is_zero() || is_unit(z)) throw MathError(Errc::zero_or_unit, to_string(z));

    GaussianFactorization out;
    GaussianInt rest = z;
    auto strip = [&](const GaussianInt& pi) {
        unsigned e = 0;
        while (auto q = exact_div(rest, pi)) {
            rest = std::move(*q);
            ++e;
        }
        if (e != 0) out.factors.push_back({pi, e});
    };

    for (const auto& [p, e] : norm_factors) {
        if (p == 2) {
            strip(GaussianInt(1, 1));
        } else if (p % 4 == 3) {
            strip(GaussianInt(p));
        } else {
            const TwoSquareRep rep = represent_prime(p);
            strip(canonical_associate(GaussianInt(rep.a, rep.b)));
            strip(canonical_associate(GaussianInt(rep.a, -rep.b)));
        }
    }
    if (!is_unit(rest)) throw MathError(Errc::invalid_argument, "norm factorization does not match " + to_string(z));
    out.unit = rest;
    std::sort(out.factors.begin(), out.factors.end(),
              [](const GaussianPrimePower& x, const GaussianPrimePower& y) { return norm_order(x.prime, y.prime); });
    return out;
}

}  // namespace detail

GaussianFactorization factor(const GaussianInt& z) {
    if (z.is_zero() || is_unit(z)) throw MathError(Errc::zero_or_unit, to_string(z));
    return detail::factor_with_norm_factors(z, factorize(norm(z)).factors);
}

}  // namespace quadres
