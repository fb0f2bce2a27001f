#include <doctest.h>

#include <map>

#include "galoislab/applications.hpp"
#include "galoislab/errors.hpp"
#include "galoislab/moment_formulas.hpp"
#include "galoislab/q_combinatorics.hpp"

using galoislab::invalid_input;
using galoislab::apps::code_count_asymptotics;
using galoislab::apps::demazure_basic_specialization;
using galoislab::apps::demazure_d;
using galoislab::apps::demazure_gamma_moments;
using galoislab::exact::BigInteger;
using galoislab::exact::Rational;
using galoislab::qcombi::Composition;
using galoislab::qcombi::galois_number;
using galoislab::qcombi::q_binomial;
using galoislab::qcombi::rogers_szego;
using galoislab::qpoly::QPolynomial;

TEST_SUITE_BEGIN("apps");

TEST_CASE("code count numerator and estimates for n=2, q=2") {
    const auto report = code_count_asymptotics(2, 2);
    CHECK(report.numerator.to_string() == "3 + q");
    CHECK(report.p == 2);
    CHECK(report.a == 1);
    CHECK(report.permutation_estimate == Rational(5L, 2L));
    CHECK(report.monomial_estimate == Rational(5L, 2L));   // (q-1)^(n-1) = 1
    CHECK(report.semilinear_estimate == Rational(5L, 2L)); // a = 1
}

TEST_CASE("prime power recognition") {
    const auto q4 = code_count_asymptotics(2, 4);
    CHECK(q4.p == 2);
    CHECK(q4.a == 2);
    // Gamma denominator gains the factor a = 2: 2! * 3 * 2.
    CHECK(q4.semilinear_estimate ==
          Rational(q4.numerator.eval_integer(BigInteger(4)), BigInteger(12)));
    const auto q9 = code_count_asymptotics(3, 9);
    CHECK(q9.p == 3);
    CHECK(q9.a == 2);
    CHECK_THROWS_AS(code_count_asymptotics(3, 6), invalid_input);
    CHECK_THROWS_AS(code_count_asymptotics(3, 12), invalid_input);
    CHECK_THROWS_AS(code_count_asymptotics(3, 1), invalid_input);
}

TEST_CASE("code numerator equals the classical galois number") {
    for (std::uint32_t n = 0; n <= 9; ++n)
        CHECK(code_count_asymptotics(n, 2).numerator == galois_number(n, 2));
}

TEST_CASE("degree shift values and integrality") {
    CHECK(demazure_d(4, 2) == std::make_pair(0u, BigInteger(4)));
    CHECK(demazure_d(0, 5).second == BigInteger(0));
    CHECK(demazure_d(5, 3) == std::make_pair(2u, BigInteger(8)));
    CHECK(demazure_d(3, 2) == std::make_pair(1u, BigInteger(2)));
    for (std::uint32_t N = 0; N <= 60; ++N)
        for (std::uint32_t r = 2; r <= 12; ++r) {
            const auto [i, d] = demazure_d(N, r);
            CHECK(i == N % r);
            CHECK(d >= BigInteger(0));
        }
}

TEST_CASE("basic specialization carries the galois polynomial") {
    const auto s42 = demazure_basic_specialization(4, 2);
    CHECK(s42.degree_shift == BigInteger(4));
    CHECK(s42.polynomial == galois_number(4, 2));
    CHECK(demazure_basic_specialization(1, 6).polynomial == QPolynomial(6L));
    CHECK(demazure_basic_specialization(3, 2).polynomial.to_string() == "4 + 2*q + 2*q^2");
    CHECK(demazure_basic_specialization(3, 2).degree_shift == BigInteger(2));
}

TEST_CASE("worked example: z-graded expansion of H_4^(2) at (z, 1/z)") {
    const auto graded = rogers_szego(4, 2).specialize_z_zinv();
    // (z^4 + z^-4) q^0 + (z^2 + z^-2)(q^3+q^2+q+1) + z^0 (q^4+q^3+2q^2+q+1)
    REQUIRE(graded.size() == 5);
    CHECK(graded.at(4) == QPolynomial(1L));
    CHECK(graded.at(-4) == QPolynomial(1L));
    CHECK(graded.at(2).to_string() == "1 + q + q^2 + q^3");
    CHECK(graded.at(-2).to_string() == "1 + q + q^2 + q^3");
    CHECK(graded.at(0).to_string() == "1 + q + 2*q^2 + q^3 + q^4");
    // The graded pieces are the Gaussian binomials of the expansion.
    CHECK(graded.at(2) == q_binomial(4, 1));
    CHECK(graded.at(0) == q_binomial(4, 2));
    // Collapsing the z-grading recovers the Galois number, and the shift
    // is the example's d_2(4) = 4.
    QPolynomial total;
    for (const auto& [z, p] : graded) total += p;
    CHECK(total == galois_number(4, 2));
    CHECK(demazure_d(4, 2).second == BigInteger(4));
}

TEST_CASE("worked example: degree-graded character equals the shifted expansion") {
    // The character lives in nonnegative powers of 1/q: its coefficient at
    // degree -l (in the scaling direction) must equal the coefficient of
    // q^(d - l) in the corresponding z-row of the expansion, d = 4.
    const auto graded = rogers_szego(4, 2).specialize_z_zinv();
    const BigInteger d = demazure_d(4, 2).second;
    REQUIRE(d == BigInteger(4));
    // Character rows, copied from the worked expansion: map from z-exponent
    // to coefficients of (e^0, e^-delta, e^-2delta, e^-3delta, e^-4delta).
    const std::map<std::int64_t, std::vector<long>> character = {
        {4, {0, 0, 0, 0, 1}},  {-4, {0, 0, 0, 0, 1}}, {2, {0, 1, 1, 1, 1}},
        {-2, {0, 1, 1, 1, 1}}, {0, {1, 1, 2, 1, 1}}};
    for (const auto& [z_exp, char_coeffs] : character) {
        const QPolynomial& h_row = graded.at(z_exp);
        for (std::size_t l = 0; l <= 4; ++l)
            CHECK(BigInteger(char_coeffs[l]) == h_row.coeff(4 - l));
    }
}

TEST_CASE("gamma moments") {
    const auto [mean42, var42] = demazure_gamma_moments(4, 2);
    CHECK(mean42 == Rational(5L, 2L));
    // d_2(4) - E[G_(4,2)] = 4 - 3/2.
    CHECK(mean42 == Rational(BigInteger(4)) - galoislab::stats::galois_mean_var_formula(4, 2).first);
    CHECK(var42 == galoislab::stats::galois_mean_var_formula(4, 2).second);
    CHECK(demazure_gamma_moments(1, 4) == std::make_pair(Rational(), Rational()));
    for (std::uint32_t N = 0; N <= 20; ++N)
        for (std::uint32_t r = 2; r <= 5; ++r) {
            const auto [mean, variance] = demazure_gamma_moments(N, r);
            const auto [gmean, gvariance] = galoislab::stats::galois_mean_var_formula(N, r);
            CHECK(variance == gvariance);
            CHECK(mean == Rational(demazure_d(N, r).second) - gmean);
        }
}

TEST_CASE("json report shapes") {
    const std::string code_json = code_count_asymptotics(2, 2).to_json();
    CHECK(code_json.find("\"n\":2") != std::string::npos);
    CHECK(code_json.find("\"permutation\":\"5/2\"") != std::string::npos);
    const std::string dem_json = demazure_basic_specialization(4, 2).to_json();
    CHECK(dem_json.find("\"degree_shift\":\"4\"") != std::string::npos);
    CHECK(dem_json.find("\"polynomial\":") != std::string::npos);
}

TEST_SUITE_END();
