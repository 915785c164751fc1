#include "quadres/oracle.hpp"
#include "support.hpp"

using namespace quadres;
using quadres::test::ints;

TEST_CASE("brute_sqrt_mod") {
    CHECK(oracle::brute_sqrt_mod(61, 180).residues == ints({31, 41, 49, 59, 121, 131, 139, 149}));
    CHECK(oracle::brute_sqrt_mod(2, 9).empty());
    CHECK(oracle::brute_sqrt_mod(0, 1).residues == ints({0}));
    CHECK(oracle::brute_sqrt_mod(-1, 5).residues == ints({2, 3}));
    CHECK_ERRC(oracle::brute_sqrt_mod(1, 0), Errc::invalid_argument);
    CHECK_ERRC(oracle::brute_sqrt_mod(1, oracle::kScanBudget + 1), Errc::budget_exceeded);
}

TEST_CASE("brute_quadratic") {
    CHECK(oracle::brute_quadratic(3, 7, -1, 15).residues == ints({4, 7}));
    CHECK(oracle::brute_quadratic(3, 7, -1, 195).residues == ints({7, 34, 112, 124}));
    CHECK(oracle::brute_quadratic(0, 2, -4, 6).residues == ints({2, 5}));
    CHECK_ERRC(oracle::brute_quadratic(1, 0, 0, Int(10) * oracle::kScanBudget), Errc::budget_exceeded);
}

TEST_CASE("brute_two_squares") {
    const auto reps = oracle::brute_two_squares(25);
    CHECK(reps.size() == 12);
    CHECK(std::is_sorted(reps.begin(), reps.end(), lex_less));
    for (const auto& r : reps) CHECK(r.value() == 25);
    CHECK(oracle::brute_two_squares(0).size() == 1);
    CHECK(oracle::brute_two_squares(3).empty());
    CHECK(oracle::brute_two_squares(-4).empty());
    CHECK(oracle::brute_two_squares(1).size() == 4);
}

TEST_CASE("brute symbols") {
    CHECK(oracle::brute_legendre(2, 7) == Symbol::positive);
    CHECK(oracle::brute_legendre(2, 5) == Symbol::negative);
    CHECK(oracle::brute_legendre(13, 13) == Symbol::zero);
    CHECK_ERRC(oracle::brute_legendre(1, 9), Errc::not_odd_prime);
    CHECK(oracle::brute_jacobi(365, 1847) == Symbol::positive);
    CHECK(oracle::brute_jacobi(2, 9) == Symbol::positive);
    CHECK(oracle::brute_jacobi(7, 1) == Symbol::positive);
    CHECK(oracle::brute_jacobi(3, -7) == oracle::brute_jacobi(3, 7));
    CHECK_ERRC(oracle::brute_jacobi(1, 4), Errc::even_modulus);
}

TEST_CASE("brute_is_prime") {
    CHECK_FALSE(oracle::brute_is_prime(1));
    CHECK(oracle::brute_is_prime(2));
    CHECK(oracle::brute_is_prime(1847));
    CHECK_FALSE(oracle::brute_is_prime(1849));
    for (long long n = 0; n < 3000; ++n) REQUIRE(oracle::brute_is_prime(n) == test::small_prime(n));
}
