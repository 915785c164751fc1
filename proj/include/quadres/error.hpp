#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadres {

enum class Errc {
    not_invertible,
    non_coprime_moduli,
    not_odd_prime,
    not_coprime,
    even_modulus,
    even_argument,
    division_by_zero,
    both_zero,
    zero_argument,
    zero_or_unit,
    wrong_residue_class,
    not_a_root,
    bad_parameters,
    linear_congruence,
    budget_exceeded,
    invalid_argument,
};

std::string_view errc_name(Errc code);

/// Domain error raised by every library operation whose precondition fails.
class MathError : public std::domain_error {
public:
    MathError(Errc code, const std::string& what)
        : std::domain_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace quadres
