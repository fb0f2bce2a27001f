#include "galoislab/normality.hpp"

#include <algorithm>

#include "galoislab/coeff_distribution.hpp"
#include "galoislab/errors.hpp"
#include "galoislab/q_combinatorics.hpp"

namespace galoislab {
namespace stats {

namespace {

using exact::pow10;

// Guard digits carried beyond the requested precision. The erf series at
// the clamp radius R cancels through terms of size ~exp(R^2/2) ~ 1e15 and
// runs for a few hundred truncated operations, so 30 digits leave the
// final error far below one requested ulp.
constexpr unsigned k_guard = 30;

// x * 10^scale, truncated toward zero.
BigInteger fp_from_rational(const Rational& x, unsigned scale) {
    return (x.numerator() * pow10(scale)).quotient(x.denominator());
}

// arctan(1/m) * 10^scale by the alternating inverse-power series.
BigInteger fp_atan_inv(unsigned long m, unsigned scale) {
    const BigInteger m2(m * m);
    BigInteger power = pow10(scale).quotient(BigInteger(m));
    BigInteger acc(0);
    bool negative = false;
    for (unsigned long k = 0; !power.is_zero(); ++k) {
        const BigInteger term = power.quotient(BigInteger(2 * k + 1));
        if (negative)
            acc -= term;
        else
            acc += term;
        negative = !negative;
        power = power.quotient(m2);
    }
    return acc;
}

// pi * 10^scale via Machin: pi = 16 atan(1/5) - 4 atan(1/239).
BigInteger fp_pi(unsigned scale) {
    return fp_atan_inv(5, scale) * BigInteger(16) - fp_atan_inv(239, scale) * BigInteger(4);
}

struct NormalCdf {
    unsigned digits;   // requested output scale
    unsigned work;     // internal scale
    BigInteger one;    // 10^work
    BigInteger sqrt_2pi;
    BigInteger clamp;  // R * 10^work; |x| >= R collapses to 0/1

    explicit NormalCdf(unsigned requested_digits)
        : digits(requested_digits), work(requested_digits + k_guard), one(pow10(work)) {
        sqrt_2pi = BigInteger::isqrt(BigInteger(2) * fp_pi(work) * one);
        // Clamp radius with 1 - Phi(R) <= exp(-R^2/2) <= 10^-(digits+3):
        // R^2 >= 2 (digits+3) ln 10, using 2.302585092994046... < 2302586/10^6.
        const BigInteger r2_scaled =
            BigInteger(2) * BigInteger(static_cast<unsigned long>(digits) + 3) *
            BigInteger(2302586UL) * pow10(2 * work).quotient(BigInteger(1000000UL));
        clamp = BigInteger::isqrt(r2_scaled) + BigInteger(1);
    }

    BigInteger mul(const BigInteger& a, const BigInteger& b) const {
        return (a * b).quotient(one);
    }

    // Phi(x) at the working scale, x given at the working scale.
    BigInteger eval_work(const BigInteger& x) const {
        const bool negative = x.sign() < 0;
        const BigInteger ax = x.abs();
        if (ax >= clamp) return negative ? BigInteger(0) : one;
        // Phi(|x|) = 1/2 + T / sqrt(2 pi),
        // T = sum_n (-1)^n |x|^(2n+1) / (n! 2^n (2n+1)).
        const BigInteger x2 = mul(ax, ax);
        BigInteger u = ax; // |x|^(2n+1) / (n! 2^n)
        BigInteger t(0);
        bool subtract = false;
        for (unsigned long n = 0; !u.is_zero(); ++n) {
            const BigInteger term = u.quotient(BigInteger(2 * n + 1));
            if (subtract)
                t -= term;
            else
                t += term;
            subtract = !subtract;
            u = mul(u, x2).quotient(BigInteger(2 * (n + 1)));
        }
        BigInteger phi = one.quotient(BigInteger(2)) + (t * one).quotient(sqrt_2pi);
        if (phi.sign() < 0) phi = BigInteger(0);
        if (phi > one) phi = one;
        return negative ? one - phi : phi;
    }

    BigInteger to_output_scale(const BigInteger& v) const {
        return v.quotient(pow10(work - digits));
    }
};

} // namespace

BigInteger normal_cdf_fixed(const Rational& x, unsigned digits) {
    const NormalCdf cdf(digits);
    return cdf.to_output_scale(cdf.eval_work(fp_from_rational(x, cdf.work)));
}

BigInteger kolmogorov_distance_fixed(const CoeffDistribution& d, unsigned digits) {
    const std::vector<Rational> m = d.moments(2);
    const Rational mean = m[0];
    const Rational variance = m[1] - mean * mean;
    if (variance.is_zero()) throw invalid_input("degenerate distribution: zero variance");
    const NormalCdf cdf(digits);
    const unsigned w = cdf.work;
    // sqrt(variance) at the working scale.
    const BigInteger sigma = BigInteger::isqrt(fp_from_rational(variance, 2 * w));
    const BigInteger scale = pow10(w);
    BigInteger cumulative(0);
    BigInteger best(0);
    const auto& weights = d.weights();
    for (std::size_t j = 0; j < weights.size(); ++j) {
        // Standardized support point (j - mean)/sigma at the working scale.
        const BigInteger numerator =
            fp_from_rational(Rational(BigInteger(static_cast<unsigned long>(j))) - mean, 2 * w);
        const BigInteger x = numerator.quotient(sigma);
        const BigInteger phi = cdf.eval_work(x);
        const BigInteger f_before = (cumulative * scale).quotient(d.total());
        cumulative += weights[j];
        const BigInteger f_after = (cumulative * scale).quotient(d.total());
        best = std::max(best, (f_before - phi).abs());
        best = std::max(best, (f_after - phi).abs());
    }
    return cdf.to_output_scale(best);
}

std::string NormalityReport::kolmogorov_string() const {
    // Rescale to exactly 12 decimals.
    BigInteger v = kolmogorov_scaled;
    if (precision_digits > 12)
        v = v.quotient(pow10(precision_digits - 12));
    else if (precision_digits < 12)
        v = v * pow10(12 - precision_digits);
    std::string digits12 = v.to_string();
    if (digits12.size() < 12) digits12.insert(0, 12 - digits12.size(), '0');
    const std::size_t split = digits12.size() - 12;
    const std::string integral = split == 0 ? "0" : digits12.substr(0, split);
    return integral + "." + digits12.substr(split);
}

std::string NormalityReport::to_json() const {
    std::string out = "{";
    out += "\"N\":" + std::to_string(N);
    out += ",\"r\":" + std::to_string(r);
    out += ",\"mean\":\"" + mean.to_string() + "\"";
    out += ",\"variance\":\"" + variance.to_string() + "\"";
    out += ",\"skewness_sq_signed\":\"" + skewness_sq_signed.to_string() + "\"";
    out += ",\"excess_kurtosis\":\"" + excess_kurtosis.to_string() + "\"";
    out += ",\"kolmogorov_distance\":\"" + kolmogorov_string() + "\"";
    out += ",\"cdf_precision\":1e-" + std::to_string(precision_digits);
    return out + "}";
}

std::string NormalityReport::csv_header() {
    return "N,r,mean,variance,skew_sq,ex_kurtosis,kolmogorov";
}

std::string NormalityReport::to_csv_row() const {
    return std::to_string(N) + "," + std::to_string(r) + "," + mean.to_string() + "," +
           variance.to_string() + "," + skewness_sq_signed.to_string() + "," +
           excess_kurtosis.to_string() + "," + kolmogorov_string();
}

NormalityReport normality_report(std::uint32_t N, std::uint32_t r,
                                 unsigned precision_digits) {
    if (N < 2) throw invalid_input("normality_report requires N >= 2");
    if (r < 2) throw invalid_input("normality_report requires r >= 2");
    const CoeffDistribution d =
        CoeffDistribution::from_polynomial(qcombi::galois_number(N, r));
    const CumulantVector cv = cumulants(d, 4);
    const Rational& k2 = cv.kappa(2);
    if (k2.is_zero()) throw invalid_input("degenerate distribution: zero variance");
    NormalityReport report;
    report.N = N;
    report.r = r;
    report.mean = cv.kappa(1);
    report.variance = k2;
    const Rational k3 = cv.kappa(3);
    Rational skew_sq = k3 * k3 / (k2 * k2 * k2);
    if (k3.sign() < 0) skew_sq = -skew_sq;
    report.skewness_sq_signed = skew_sq;
    report.excess_kurtosis = cv.kappa(4) / (k2 * k2);
    report.precision_digits = precision_digits;
    report.kolmogorov_scaled = kolmogorov_distance_fixed(d, precision_digits);
    return report;
}

} // namespace stats
} // namespace galoislab
