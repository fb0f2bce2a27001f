#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "galoislab/bernoulli.hpp"
#include "galoislab/big_integer.hpp"
#include "galoislab/composition.hpp"
#include "galoislab/errors.hpp"
#include "galoislab/rational.hpp"
#include "galoislab/symmetric_functions.hpp"

using galoislab::invalid_input;
using galoislab::exact::bernoulli_number;
using galoislab::exact::bernoulli_polynomial_eval;
using galoislab::exact::BernoulliPolynomial;
using galoislab::exact::BigInteger;
using galoislab::exact::elementary_symmetric;
using galoislab::exact::factorial;
using galoislab::exact::power_sum;
using galoislab::exact::Rational;
using galoislab::qcombi::Composition;

TEST_SUITE_BEGIN("exact");

TEST_CASE("big integer arithmetic agrees with 128-bit reference") {
    std::mt19937_64 rng(20240517);
    std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000LL, 1'000'000'000LL);
    for (int round = 0; round < 500; ++round) {
        const std::int64_t a = dist(rng), b = dist(rng);
        const BigInteger A(static_cast<long>(a)), B(static_cast<long>(b));
        CHECK((A + B).to_string() == std::to_string(a + b));
        CHECK((A - B).to_string() == std::to_string(a - b));
        const __int128 prod = static_cast<__int128>(a) * b;
        // Render the 128-bit product by hand.
        std::string expected;
        __int128 v = prod < 0 ? -prod : prod;
        if (v == 0) expected = "0";
        while (v > 0) {
            expected.insert(expected.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
            v /= 10;
        }
        if (prod < 0) expected.insert(expected.begin(), '-');
        CHECK((A * B).to_string() == expected);
        if (b != 0) {
            CHECK((A.quotient(B) * B + A.remainder(B)) == A);
            CHECK(A.remainder(B).abs() < B.abs());
        }
    }
}

TEST_CASE("big integer string round trip and pow") {
    const BigInteger big("123456789012345678901234567890");
    CHECK(big.to_string() == "123456789012345678901234567890");
    CHECK(BigInteger::pow(BigInteger(2), 100).to_string() == "1267650600228229401496703205376");
    CHECK(factorial(20).to_string() == "2432902008176640000");
    CHECK_THROWS_AS(BigInteger("12x"), invalid_input);
}

TEST_CASE("isqrt is the floor square root") {
    for (unsigned long v : {0UL, 1UL, 2UL, 3UL, 4UL, 15UL, 16UL, 17UL, 999999UL}) {
        const BigInteger s = BigInteger::isqrt(BigInteger(v));
        CHECK(s * s <= BigInteger(v));
        CHECK((s + BigInteger(1)) * (s + BigInteger(1)) > BigInteger(v));
    }
}

TEST_CASE("rationals normalize eagerly and compare canonically") {
    CHECK(Rational(2L, 4L) == Rational(1L, 2L));
    CHECK(Rational(-2L, -4L) == Rational(1L, 2L));
    CHECK(Rational(2L, -4L).to_string() == "-1/2");
    CHECK(Rational(6L, 3L).is_integer());
    CHECK(Rational(6L, 3L).to_string() == "2");
    CHECK((Rational(1L, 3L) + Rational(1L, 6L)) == Rational(1L, 2L));
    CHECK((Rational(3L, 4L) * Rational(2L, 3L)) == Rational(1L, 2L));
    CHECK((Rational(1L, 2L) / Rational(1L, 4L)) == Rational(2L));
    CHECK(Rational(-3L, 7L).pow(2) == Rational(9L, 49L));
    CHECK_THROWS_AS(Rational(BigInteger(1), BigInteger(0)), invalid_input);
    CHECK_THROWS_AS(Rational(1L) / Rational(), invalid_input);
}

TEST_CASE("bernoulli numbers match the classical table") {
    // B_0..B_12 under the B_1 = -1/2 convention.
    const std::vector<Rational> expected = {
        Rational(1L),          Rational(-1L, 2L), Rational(1L, 6L),  Rational(),
        Rational(-1L, 30L),    Rational(),        Rational(1L, 42L), Rational(),
        Rational(-1L, 30L),    Rational(),        Rational(5L, 66L), Rational(),
        Rational(-691L, 2730L)};
    for (unsigned j = 0; j < expected.size(); ++j) CHECK(bernoulli_number(j) == expected[j]);
}

TEST_CASE("odd bernoulli numbers vanish from 3 on") {
    for (unsigned j = 3; j <= 21; j += 2) CHECK(bernoulli_number(j).is_zero());
}

TEST_CASE("bernoulli polynomial evaluation") {
    // B_1(x) = x - 1/2.
    CHECK(bernoulli_polynomial_eval(1, Rational(5L)) == Rational(9L, 2L));
    // B_j(0) = B_j.
    CHECK(bernoulli_polynomial_eval(2, Rational()) == Rational(1L, 6L));
    // B_3(x) = x^3 - (3/2)x^2 + (1/2)x, so B_3(3) = 27 - 27/2 + 3/2 = 15.
    CHECK(bernoulli_polynomial_eval(3, Rational(3L)) == Rational(15L));
}

TEST_CASE("bernoulli polynomial structural invariants") {
    for (unsigned j = 0; j <= 12; ++j) {
        const BernoulliPolynomial p(j);
        CHECK(p.coefficients().back() == Rational(1L)); // monic
        CHECK(p.coefficients().front() == bernoulli_number(j));
    }
}

TEST_CASE("difference equation B_j(x+1) - B_j(x) = j x^(j-1)") {
    for (unsigned j = 1; j <= 20; ++j)
        for (long x = 0; x <= 10; ++x) {
            const Rational lhs = bernoulli_polynomial_eval(j, Rational(x + 1)) -
                                 bernoulli_polynomial_eval(j, Rational(x));
            const Rational rhs = Rational(static_cast<long>(j)) *
                                 Rational(x).pow(j - 1);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("bernoulli number equals constant term for all j <= 20") {
    for (unsigned j = 0; j <= 20; ++j)
        CHECK(bernoulli_number(j) == bernoulli_polynomial_eval(j, Rational()));
}

TEST_CASE("elementary symmetric basics") {
    CHECK(elementary_symmetric(2, Composition{1, 1}) == BigInteger(1));
    CHECK(elementary_symmetric(3, Composition{1, 1}) == BigInteger(0));
    CHECK(elementary_symmetric(2, Composition{2, 1, 1}) == BigInteger(5));
    CHECK(elementary_symmetric(0, Composition{7, 9}) == BigInteger(1));
}

TEST_CASE("power sums") {
    CHECK(power_sum(4, Composition{1, 1}) == BigInteger(2));
    CHECK(power_sum(0, Composition{2, 3}) == BigInteger(2));
    CHECK(power_sum(4, Composition{2, 1}) == BigInteger(17));
}

TEST_CASE("newton identity e2 = (p1^2 - p2)/2 on random compositions") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<std::uint32_t> part(0, 9);
    std::uniform_int_distribution<std::size_t> len(1, 6);
    for (int round = 0; round < 200; ++round) {
        std::vector<std::uint32_t> parts(len(rng));
        for (auto& p : parts) p = part(rng);
        const Composition k(parts);
        const BigInteger p1 = power_sum(1, k);
        const BigInteger p2 = power_sum(2, k);
        CHECK(elementary_symmetric(2, k) == (p1 * p1 - p2).div_exact(BigInteger(2)));
    }
}

TEST_SUITE_END();
