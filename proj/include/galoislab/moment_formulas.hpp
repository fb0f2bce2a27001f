#ifndef GALOISLAB_MOMENT_FORMULAS_HPP
#define GALOISLAB_MOMENT_FORMULAS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "galoislab/big_integer.hpp"
#include "galoislab/composition.hpp"
#include "galoislab/rational.hpp"

namespace galoislab {
namespace stats {

using exact::BigInteger;
using exact::Rational;
using qcombi::Composition;

// Closed-form mean and variance of the coefficient distribution of the
// q-multinomial [N; k]_q:
//   mean = e_2(k) / 2,  variance = ((e_1(k) + 1) e_2(k) - e_3(k)) / 12.
std::pair<Rational, Rational> qmultinomial_mean_var_formula(const Composition& k);

// Closed-form mean and variance of the coefficient distribution of the
// generalized Galois number G_N^(r):
//   mean = (r-1) N(N-1) / (4r),
//   variance = (r-1)(r+1) N(N-1)(2N+5) / (72 r^2).
std::pair<Rational, Rational> galois_mean_var_formula(std::uint32_t N, std::uint32_t r);

enum class WeightedSumMode { e1 = 1, e2 = 2, e3 = 3, e4 = 4, e2_squared = 100 };

// Multinomially weighted sums of elementary symmetric functions over all
// compositions of N into r parts, by closed form:
//   sum_k C(N;k) e_s(k) = s! C(N,s) C(r,s) r^(N-s),
//   sum_k C(N;k) e_2(k)^2 = r^N (N^2(r-1)^2 - N(r-1)^2 + 2(r-1)) / (4r^2) * N(N-1).
BigInteger multinomial_weighted_sum(std::uint32_t N, std::uint32_t r, WeightedSumMode mode);

// Definitional route, for verification: the literal sum over compositions.
BigInteger multinomial_weighted_sum_by_definition(std::uint32_t N, std::uint32_t r,
                                                  WeightedSumMode mode);

// j-th cumulant of the coefficient distribution of [N; k]_q, N = sum(k):
//   j = 1: N(N-1)/4 - sum_i k_i(k_i-1)/4   (equals e_2(k)/2),
//   j >= 2: B_j / (j(j+1)) * (B_(j+1)(N+1) - sum_i B_(j+1)(k_i+1)),
// which vanishes for odd j >= 3.
Rational qmultinomial_cumulant_formula(const Composition& k, unsigned j);
// Overload validating an explicitly supplied N against sum(k).
Rational qmultinomial_cumulant_formula(std::uint32_t N, const Composition& k, unsigned j);

// Composition with parts floor(N/r) and ceil(N/r), larger parts last.
Composition central_composition(std::uint32_t N, std::uint32_t r);
// Central composition with min(floor(sqrt(N)), last part) units moved from
// the last coordinate to the first.
Composition sqrt_shifted_composition(std::uint32_t N, std::uint32_t r);

enum class CompositionSchedule { central, sqrt_shifted };

struct CumulantOrderRow {
    std::uint32_t N = 0;
    Rational kappa;
    Rational ratio; // kappa_j / N^(j+1)
};

// Scaling table kappa_j / N^(j+1) along an N-list for a composition
// schedule; for j = 1 and j = 2 the known limits (r-1)/4r and
// (r^2-1)/36r^2 are attached and convergence toward them is flagged.
struct CumulantOrderReport {
    unsigned j = 0;
    std::uint32_t r = 0;
    CompositionSchedule schedule = CompositionSchedule::central;
    std::vector<CumulantOrderRow> rows;
    bool has_limit = false;
    Rational limit;
    // Gap to the limit shrinks along the list and the final gap is within
    // the tolerance; always true for orders without a known limit.
    bool converged = true;
};

CumulantOrderReport cumulant_order_check(CompositionSchedule schedule, unsigned j,
                                         std::uint32_t r,
                                         const std::vector<std::uint32_t>& N_list,
                                         const Rational& tolerance);

// Exact covariance matrix of (X_1, ..., X_r; Y) under the joint law given
// by the Rogers-Szego expansion: mass of (k, j) is coeff_j([N;k]_q) / r^N.
struct CovarianceMatrix {
    std::size_t size = 0; // r + 1, Y last
    std::vector<std::vector<Rational>> entries;

    const Rational& at(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }
};

CovarianceMatrix rogers_szego_covariance(std::uint32_t N, std::uint32_t r);

} // namespace stats
} // namespace galoislab

#endif
