#include "galoislab/moment_formulas.hpp"

#include <cmath>

#include "galoislab/bernoulli.hpp"
#include "galoislab/coeff_distribution.hpp"
#include "galoislab/errors.hpp"
#include "galoislab/q_combinatorics.hpp"
#include "galoislab/symmetric_functions.hpp"

namespace galoislab {
namespace stats {

using exact::bernoulli_number;
using exact::BernoulliPolynomial;
using exact::elementary_symmetric;

std::pair<Rational, Rational> qmultinomial_mean_var_formula(const Composition& k) {
    const Rational e1(elementary_symmetric(1, k));
    const Rational e2(elementary_symmetric(2, k));
    const Rational e3(elementary_symmetric(3, k));
    const Rational mean = e2 / Rational(2L);
    const Rational variance = ((e1 + Rational(1L)) * e2 - e3) / Rational(12L);
    return {mean, variance};
}

std::pair<Rational, Rational> galois_mean_var_formula(std::uint32_t N, std::uint32_t r) {
    if (r < 2) throw invalid_input("galois_mean_var_formula requires r >= 2");
    const BigInteger bn(static_cast<unsigned long>(N));
    const BigInteger br(static_cast<unsigned long>(r));
    if (N == 0) return {Rational(), Rational()};
    const BigInteger nn1 = bn * BigInteger(static_cast<unsigned long>(N - 1));
    const Rational mean(BigInteger(static_cast<unsigned long>(r - 1)) * nn1,
                        BigInteger(4) * br);
    const Rational variance(BigInteger(static_cast<unsigned long>(r - 1)) *
                                BigInteger(static_cast<unsigned long>(r + 1)) * nn1 *
                                BigInteger(static_cast<unsigned long>(2 * N + 5)),
                            BigInteger(72) * br * br);
    return {mean, variance};
}

BigInteger multinomial_weighted_sum(std::uint32_t N, std::uint32_t r, WeightedSumMode mode) {
    const BigInteger rN = BigInteger::pow(BigInteger(static_cast<unsigned long>(r)), N);
    if (mode == WeightedSumMode::e2_squared) {
        // r^N (N^2(r-1)^2 - N(r-1)^2 + 2(r-1)) / (4 r^2) * N(N-1)
        const BigInteger n(static_cast<unsigned long>(N));
        const BigInteger rm1(static_cast<unsigned long>(r - 1));
        const BigInteger inner = n * n * rm1 * rm1 - n * rm1 * rm1 + BigInteger(2) * rm1;
        if (N == 0) return BigInteger(0);
        const Rational value(rN * inner * n * BigInteger(static_cast<unsigned long>(N - 1)),
                             BigInteger(4) * BigInteger(static_cast<unsigned long>(r)) *
                                 BigInteger(static_cast<unsigned long>(r)));
        return value.to_integer();
    }
    const unsigned s = static_cast<unsigned>(mode);
    // s! C(N,s) C(r,s) r^(N-s); zero when s exceeds N or r.
    if (s > N || s > r) return BigInteger(0);
    return exact::factorial(s) * qcombi::binomial(N, s) * qcombi::binomial(r, s) *
           BigInteger::pow(BigInteger(static_cast<unsigned long>(r)),
                           static_cast<unsigned long>(N - s));
}

BigInteger multinomial_weighted_sum_by_definition(std::uint32_t N, std::uint32_t r,
                                                  WeightedSumMode mode) {
    BigInteger acc(0);
    qcombi::for_each_composition(N, r, [&](const std::vector<std::uint32_t>& parts) {
        const Composition k(parts);
        // C(N; k) = N! / prod k_i!
        BigInteger multinomial = exact::factorial(N);
        for (auto p : parts) multinomial = multinomial.div_exact(exact::factorial(p));
        BigInteger stat;
        if (mode == WeightedSumMode::e2_squared) {
            const BigInteger e2 = elementary_symmetric(2, k);
            stat = e2 * e2;
        } else {
            stat = elementary_symmetric(static_cast<unsigned>(mode), k);
        }
        acc.add_mul(multinomial, stat);
    });
    return acc;
}

Rational qmultinomial_cumulant_formula(const Composition& k, unsigned j) {
    if (j < 1) throw invalid_input("cumulant order must be >= 1");
    const std::uint64_t N = k.sum();
    if (j == 1) {
        // kappa_(1,N) - sum_i kappa_(1,k_i) with kappa_(1,m) = m(m-1)/4.
        Rational acc(BigInteger(N) * BigInteger(N > 0 ? N - 1 : 0), BigInteger(4));
        for (auto p : k.parts())
            acc -= Rational(BigInteger(static_cast<unsigned long>(p)) *
                                BigInteger(static_cast<unsigned long>(p > 0 ? p - 1 : 0)),
                            BigInteger(4));
        return acc;
    }
    const Rational bj = bernoulli_number(j);
    if (bj.is_zero()) return Rational(); // odd j >= 3
    const BernoulliPolynomial bp(j + 1);
    Rational diff = bp.eval(Rational(BigInteger(N + 1)));
    for (auto p : k.parts())
        diff -= bp.eval(Rational(static_cast<long>(p) + 1));
    return bj / Rational(static_cast<long>(j) * static_cast<long>(j + 1)) * diff;
}

Rational qmultinomial_cumulant_formula(std::uint32_t N, const Composition& k, unsigned j) {
    if (k.sum() != N)
        throw invalid_input("composition " + k.to_string() + " does not sum to " +
                            std::to_string(N));
    return qmultinomial_cumulant_formula(k, j);
}

Composition central_composition(std::uint32_t N, std::uint32_t r) {
    if (r < 1) throw invalid_input("central composition requires r >= 1");
    const std::uint32_t base = N / r;
    const std::uint32_t larger = N % r;
    std::vector<std::uint32_t> parts(r, base);
    for (std::uint32_t i = 0; i < larger; ++i) parts[r - 1 - i] += 1;
    return Composition(std::move(parts));
}

Composition sqrt_shifted_composition(std::uint32_t N, std::uint32_t r) {
    Composition c = central_composition(N, r);
    std::vector<std::uint32_t> parts = c.parts();
    if (r < 2) return c;
    const std::uint32_t shift = std::min(
        static_cast<std::uint32_t>(std::sqrt(static_cast<double>(N))), parts[r - 1]);
    parts[0] += shift;
    parts[r - 1] -= shift;
    return Composition(std::move(parts));
}

CumulantOrderReport cumulant_order_check(CompositionSchedule schedule, unsigned j,
                                         std::uint32_t r,
                                         const std::vector<std::uint32_t>& N_list,
                                         const Rational& tolerance) {
    if (j < 1) throw invalid_input("cumulant order must be >= 1");
    CumulantOrderReport report;
    report.j = j;
    report.r = r;
    report.schedule = schedule;
    if (j == 1) {
        report.has_limit = true;
        report.limit = Rational(static_cast<long>(r) - 1, 4L * r);
    } else if (j == 2) {
        report.has_limit = true;
        report.limit = Rational(static_cast<long>(r) * r - 1, 36L * static_cast<long>(r) * r);
    }
    for (auto N : N_list) {
        const Composition k = schedule == CompositionSchedule::central
                                  ? central_composition(N, r)
                                  : sqrt_shifted_composition(N, r);
        CumulantOrderRow row;
        row.N = N;
        row.kappa = qmultinomial_cumulant_formula(k, j);
        row.ratio = row.kappa / Rational(BigInteger::pow(BigInteger(static_cast<unsigned long>(N)),
                                                         j + 1));
        report.rows.push_back(std::move(row));
    }
    if (report.has_limit && !report.rows.empty()) {
        Rational prev_gap;
        for (std::size_t i = 0; i < report.rows.size(); ++i) {
            const Rational gap = (report.rows[i].ratio - report.limit).abs();
            if (i > 0 && gap > prev_gap) report.converged = false;
            prev_gap = gap;
        }
        if (prev_gap > tolerance) report.converged = false;
    }
    return report;
}

CovarianceMatrix rogers_szego_covariance(std::uint32_t N, std::uint32_t r) {
    const qcombi::RogersSzegoExpansion expansion = qcombi::rogers_szego(N, r);
    const BigInteger total = BigInteger::pow(BigInteger(static_cast<unsigned long>(r)), N);
    // Accumulate integer-weighted first and second joint moments.
    std::vector<BigInteger> sum_x(r, BigInteger(0));
    std::vector<std::vector<BigInteger>> sum_xx(r, std::vector<BigInteger>(r, BigInteger(0)));
    std::vector<BigInteger> sum_xy(r, BigInteger(0));
    BigInteger sum_y(0), sum_yy(0);
    for (const auto& [k, poly] : expansion.entries()) {
        const BigInteger w = poly.value_at_one();
        BigInteger m1(0), m2(0); // sum_j j w_j and sum_j j^2 w_j
        const auto& coeffs = poly.coefficients();
        for (std::size_t e = 1; e < coeffs.size(); ++e) {
            const BigInteger je(static_cast<unsigned long>(e));
            m1.add_mul(coeffs[e], je);
            m2.add_mul(coeffs[e], je * je);
        }
        sum_y += m1;
        sum_yy += m2;
        for (std::uint32_t i = 0; i < r; ++i) {
            const BigInteger ki(static_cast<unsigned long>(k[i]));
            if (k[i] == 0) continue;
            sum_x[i].add_mul(ki, w);
            sum_xy[i].add_mul(ki, m1);
            for (std::uint32_t l = 0; l < r; ++l)
                if (k[l] != 0)
                    sum_xx[i][l].add_mul(ki, BigInteger(static_cast<unsigned long>(k[l])) * w);
        }
    }
    CovarianceMatrix cov;
    cov.size = r + 1;
    cov.entries.assign(r + 1, std::vector<Rational>(r + 1));
    const Rational ey(sum_y, total);
    for (std::uint32_t i = 0; i < r; ++i) {
        const Rational exi(sum_x[i], total);
        for (std::uint32_t l = 0; l < r; ++l) {
            const Rational exl(sum_x[l], total);
            cov.entries[i][l] = Rational(sum_xx[i][l], total) - exi * exl;
        }
        cov.entries[i][r] = Rational(sum_xy[i], total) - exi * ey;
        cov.entries[r][i] = cov.entries[i][r];
    }
    cov.entries[r][r] = Rational(sum_yy, total) - ey * ey;
    return cov;
}

} // namespace stats
} // namespace galoislab
