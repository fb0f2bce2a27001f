#ifndef GALOISLAB_APPLICATIONS_HPP
#define GALOISLAB_APPLICATIONS_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "galoislab/big_integer.hpp"
#include "galoislab/q_polynomial.hpp"
#include "galoislab/rational.hpp"

namespace galoislab {
namespace apps {

using exact::BigInteger;
using exact::Rational;
using qpoly::QPolynomial;

// Asymptotic counts of linear q-ary codes of length n under permutation
// (S), monomial (M) and semi-linear monomial (Gamma) equivalence. The
// shared numerator is the inversion statistic over permutations with at
// most one descent, weighted by C(n+1-des, n); the three estimates divide
// its value at q by n!, n!(q-1)^(n-1) and n!(q-1)^(n-1)a with a = log_p q.
struct CodeCountAsymptotics {
    std::uint32_t n = 0;
    std::uint64_t q = 0;
    std::uint64_t p = 0; // characteristic
    std::uint32_t a = 0; // q = p^a
    QPolynomial numerator;
    Rational permutation_estimate;
    Rational monomial_estimate;
    Rational semilinear_estimate;

    std::string to_json() const;
};

// q must be a prime power; values are asymptotic estimates, not exact
// counts.
CodeCountAsymptotics code_count_asymptotics(std::uint32_t n, std::uint64_t q);

// Residue i (0 <= i < r, i == N mod r) and the degree shift
// d_r(N) = N(N-1)/2 - (N-i)(N+i-r)/(2r), asserted to be integral.
std::pair<std::uint32_t, BigInteger> demazure_d(std::uint32_t N, std::uint32_t r);

// Basic specialization of the degree-graded character: the polynomial in
// the degree variable is the generalized Galois number, shifted by d_r(N).
struct DemazureSpecialization {
    std::uint32_t N = 0;
    std::uint32_t r = 0;
    std::uint32_t i = 0;
    BigInteger degree_shift; // d_r(N)
    QPolynomial polynomial;  // equals G_N^(r)

    std::string to_json() const;
};

DemazureSpecialization demazure_basic_specialization(std::uint32_t N, std::uint32_t r);

// Mean and variance of the degree statistic Gamma_(N,r), read downward
// from the top weight:
//   mean = ((r+1)N(N-1) - 2(N-i)(N+i-r)) / (4r) = d_r(N) - E[G_(N,r)],
//   variance = Var(G_(N,r)).
std::pair<Rational, Rational> demazure_gamma_moments(std::uint32_t N, std::uint32_t r);

} // namespace apps
} // namespace galoislab

#endif
