#ifndef GALOISLAB_NORMALITY_HPP
#define GALOISLAB_NORMALITY_HPP

#include <cstdint>
#include <string>

#include "galoislab/big_integer.hpp"
#include "galoislab/coeff_distribution.hpp"
#include "galoislab/rational.hpp"

namespace galoislab {
namespace stats {

// Standard normal CDF evaluated in fixed-point decimal arithmetic. The
// returned integer v represents v * 10^-digits and satisfies
// |v * 10^-digits - Phi(x)| < 10^-digits. Everything is computed with
// integer series (Taylor expansion of erf, Machin's formula for pi) at a
// guarded working scale; no floating point enters the value path.
BigInteger normal_cdf_fixed(const Rational& x, unsigned digits);

// sup_x |F(x) - Phi((x - mean)/sqrt(var))| for the right-continuous CDF F
// of d, maximized over both one-sided gaps at every support point.
// Returned at scale 10^-digits.
BigInteger kolmogorov_distance_fixed(const CoeffDistribution& d, unsigned digits);

struct NormalityReport {
    std::uint32_t N = 0;
    std::uint32_t r = 0;
    Rational mean;
    Rational variance;
    // sign(kappa_3) * kappa_3^2 / kappa_2^3, exact (squared to avoid
    // irrational square roots).
    Rational skewness_sq_signed;
    Rational excess_kurtosis; // kappa_4 / kappa_2^2
    BigInteger kolmogorov_scaled; // at 10^-precision_digits
    unsigned precision_digits = 12;

    // Kolmogorov distance as a fixed 12-decimal string.
    std::string kolmogorov_string() const;
    std::string to_json() const;
    static std::string csv_header();
    std::string to_csv_row() const;
};

// Standardized-moment and Kolmogorov diagnostics for the coefficient
// distribution of G_N^(r). Requires N >= 2 and r >= 2 (the distribution is
// degenerate otherwise).
NormalityReport normality_report(std::uint32_t N, std::uint32_t r,
                                 unsigned precision_digits = 12);

} // namespace stats
} // namespace galoislab

#endif
