#include <doctest.h>

#include <cmath>
#include <random>

#include "galoislab/coeff_distribution.hpp"
#include "galoislab/errors.hpp"
#include "galoislab/moment_formulas.hpp"
#include "galoislab/normality.hpp"
#include "galoislab/q_combinatorics.hpp"
#include "test_oracles.hpp"

using galoislab::invalid_input;
using galoislab::exact::BigInteger;
using galoislab::exact::Rational;
using galoislab::qcombi::Composition;
using galoislab::qcombi::galois_number;
using galoislab::qcombi::q_binomial;
using galoislab::qcombi::q_factorial;
using galoislab::qcombi::q_multinomial;
using galoislab::qpoly::QPolynomial;
using namespace galoislab::stats;

namespace {

QPolynomial poly(std::initializer_list<long> coeffs) {
    std::vector<BigInteger> v;
    for (long c : coeffs) v.push_back(BigInteger(c));
    return QPolynomial(std::move(v));
}

// Independent oracle for the moment/cumulant relation: the partition-
// indexed sum E[X^a] = sum over pi_1 + 2 pi_2 + ... = a of
// prod (kappa_i/i!)^pi_i * a!/(pi_1! ... pi_a!).
Rational moment_by_partition_sum(const CumulantVector& cv, unsigned alpha) {
    Rational total;
    std::vector<unsigned> pi(alpha + 1, 0);
    auto recurse = [&](auto&& self, unsigned index, unsigned remaining) -> void {
        if (index > alpha) {
            if (remaining != 0) return;
            Rational term(1L);
            for (unsigned i = 1; i <= alpha; ++i) {
                if (pi[i] == 0) continue;
                const Rational base =
                    cv.kappa(i) / Rational(galoislab::exact::factorial(i));
                term = term * base.pow(pi[i]) /
                       Rational(galoislab::exact::factorial(pi[i]));
            }
            total += term * Rational(galoislab::exact::factorial(alpha));
            return;
        }
        for (unsigned count = 0; count * index <= remaining; ++count) {
            pi[index] = count;
            self(self, index + 1, remaining - count * index);
        }
        pi[index] = 0;
    };
    recurse(recurse, 1, alpha);
    return total;
}

} // namespace

TEST_SUITE_BEGIN("stats");

TEST_CASE("distribution from polynomial") {
    const auto fair = CoeffDistribution::from_polynomial(poly({1, 1}));
    CHECK(fair.mass(0) == Rational(1L, 2L));
    CHECK(fair.mass(1) == Rational(1L, 2L));
    const auto g22 = CoeffDistribution::from_polynomial(poly({3, 1}));
    CHECK(g22.mass(0) == Rational(3L, 4L));
    CHECK(g22.mass(1) == Rational(1L, 4L));
    const auto point = CoeffDistribution::from_polynomial(poly({5}));
    CHECK(point.mass(0) == Rational(1L));
    CHECK(point.support_size() == 1);
    CHECK_THROWS_AS(CoeffDistribution::from_polynomial(QPolynomial()), invalid_input);
    CHECK_THROWS_AS(CoeffDistribution::from_polynomial(poly({1, -1, 1})), invalid_input);
}

TEST_CASE("masses sum to one") {
    for (std::uint32_t N = 0; N <= 8; ++N) {
        const auto d = CoeffDistribution::from_polynomial(galois_number(N, 3));
        Rational sum;
        for (std::size_t j = 0; j < d.support_size(); ++j) sum += d.mass(j);
        CHECK(sum == Rational(1L));
    }
}

TEST_CASE("moments and cumulants of named small distributions") {
    const auto fair = CoeffDistribution::from_polynomial(poly({1, 1}));
    const auto m = fair.moments(2);
    CHECK(m[0] == Rational(1L, 2L));
    CHECK(m[1] == Rational(1L, 2L));
    const auto cv = cumulants(fair, 2);
    CHECK(cv.kappa(1) == Rational(1L, 2L));
    CHECK(cv.kappa(2) == Rational(1L, 4L));

    // Point mass at 3: q^3.
    const auto point = CoeffDistribution::from_polynomial(
        QPolynomial::monomial(BigInteger(7), 3));
    const auto pcv = cumulants(point, 3);
    CHECK(pcv.kappa(1) == Rational(3L));
    CHECK(pcv.kappa(2) == Rational());
    CHECK(pcv.kappa(3) == Rational());

    // Mean of the inversion statistic on S_3.
    const auto s3 = CoeffDistribution::from_polynomial(q_factorial(3));
    CHECK(cumulants(s3, 1).kappa(1) == Rational(3L, 2L));
}

TEST_CASE("moment-cumulant round trip to order 8 on random distributions") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long> weight(0, 9);
    for (int round = 0; round < 40; ++round) {
        std::vector<BigInteger> weights(1 + round % 7, BigInteger(0));
        bool any = false;
        for (auto& w : weights) {
            const long v = weight(rng);
            w = BigInteger(v);
            any = any || v > 0;
        }
        if (!any) weights[0] = BigInteger(1);
        const auto d = CoeffDistribution::from_polynomial(QPolynomial(std::move(weights)));
        const auto m = d.moments(8);
        const auto cv = cumulants_from_moments(m);
        CHECK(moments_from_cumulants(cv) == m);
        // Cross-check against the partition-indexed expansion.
        for (unsigned alpha = 1; alpha <= 8; ++alpha)
            CHECK(moment_by_partition_sum(cv, alpha) == m[alpha - 1]);
    }
}

TEST_CASE("cumulants transform correctly under shift and scale") {
    const QPolynomial base = poly({1, 3, 1, 2});
    const auto cv = cumulants(CoeffDistribution::from_polynomial(base), 4);
    // X + 2: multiply by q^2.
    QPolynomial shifted = QPolynomial();
    shifted.add_scaled_shifted(base, BigInteger(1), 2);
    const auto scv = cumulants(CoeffDistribution::from_polynomial(shifted), 4);
    CHECK(scv.kappa(1) == cv.kappa(1) + Rational(2L));
    for (unsigned j = 2; j <= 4; ++j) CHECK(scv.kappa(j) == cv.kappa(j));
    // 3X: substitute q -> q^3.
    std::vector<BigInteger> stretched(3 * 3 + 1, BigInteger(0));
    for (std::size_t e = 0; e <= 3; ++e) stretched[3 * e] = base.coeff(e);
    const auto tcv =
        cumulants(CoeffDistribution::from_polynomial(QPolynomial(std::move(stretched))), 4);
    for (unsigned j = 1; j <= 4; ++j)
        CHECK(tcv.kappa(j) == cv.kappa(j) * Rational(3L).pow(j));
}

TEST_CASE("mean and variance agree with the differentiation route") {
    // E[X] = p'(1)/p(1) and Var = second factorial moment + mean - mean^2.
    for (std::uint32_t N = 2; N <= 8; ++N)
        for (std::uint32_t r = 2; r <= 3; ++r) {
            const QPolynomial p = galois_number(N, r);
            const Rational total(p.value_at_one());
            const Rational mean = p.derivative().eval(Rational(1L)) / total;
            const Rational second = p.derivative(2).eval(Rational(1L)) / total;
            const auto m = CoeffDistribution::from_polynomial(p).moments(2);
            CHECK(m[0] == mean);
            CHECK(m[1] - m[0] * m[0] == second + mean - mean * mean);
        }
}

TEST_CASE("q-multinomial mean/variance closed form") {
    const auto [m11, v11] = qmultinomial_mean_var_formula(Composition{1, 1});
    CHECK(m11 == Rational(1L, 2L));
    CHECK(v11 == Rational(1L, 4L));
    const auto [mp, vp] = qmultinomial_mean_var_formula(Composition{7, 0});
    CHECK(mp == Rational());
    CHECK(vp == Rational());
    const auto [m211, v211] = qmultinomial_mean_var_formula(Composition{2, 1, 1});
    CHECK(m211 == Rational(5L, 2L));
    CHECK(v211 == Rational(23L, 12L));
    // Against the actual coefficient distribution of [4; (2,1,1)]_q.
    const auto d =
        CoeffDistribution::from_polynomial(q_multinomial(4, Composition{2, 1, 1}));
    const auto m = d.moments(2);
    CHECK(m[0] == m211);
    CHECK(m[1] - m[0] * m[0] == v211);
}

TEST_CASE("galois mean/variance closed form") {
    const auto [m42, v42] = galois_mean_var_formula(4, 2);
    CHECK(m42 == Rational(3L, 2L));
    CHECK(v42 == Rational(13L, 8L));
    CHECK(galois_mean_var_formula(1, 5) == std::make_pair(Rational(), Rational()));
    CHECK(galois_mean_var_formula(0, 3) == std::make_pair(Rational(), Rational()));
    for (std::uint32_t N = 0; N <= 14; ++N)
        for (std::uint32_t r = 2; r <= 4; ++r) {
            const auto [mean, variance] = galois_mean_var_formula(N, r);
            const auto d = CoeffDistribution::from_polynomial(galois_number(N, r));
            const auto m = d.moments(2);
            CHECK(m[0] == mean);
            CHECK(m[1] - m[0] * m[0] == variance);
        }
}

TEST_CASE("weighted sums: closed forms equal definitional sums") {
    CHECK(multinomial_weighted_sum(2, 2, WeightedSumMode::e2) == BigInteger(2));
    CHECK(multinomial_weighted_sum(2, 2, WeightedSumMode::e3) == BigInteger(0));
    CHECK(multinomial_weighted_sum(3, 2, WeightedSumMode::e3) == BigInteger(0));
    CHECK(multinomial_weighted_sum(2, 2, WeightedSumMode::e2_squared) == BigInteger(2));
    for (std::uint32_t N = 0; N <= 10; ++N)
        for (std::uint32_t r = 1; r <= 4; ++r)
            for (auto mode : {WeightedSumMode::e1, WeightedSumMode::e2, WeightedSumMode::e3,
                              WeightedSumMode::e4, WeightedSumMode::e2_squared})
                CHECK(multinomial_weighted_sum(N, r, mode) ==
                      multinomial_weighted_sum_by_definition(N, r, mode));
}

TEST_CASE("cumulant formula matches direct cumulants") {
    // kappa_2 of the fair Bernoulli through the Bernoulli-polynomial route.
    CHECK(qmultinomial_cumulant_formula(Composition{1, 1}, 2) == Rational(1L, 4L));
    // Odd orders vanish.
    CHECK(qmultinomial_cumulant_formula(Composition{3, 2}, 3) == Rational());
    CHECK(qmultinomial_cumulant_formula(Composition{2, 2, 1}, 5) == Rational());
    // kappa_2 of [4;(2,2)]_q: direct computation gives 5/3.
    const auto d22 = CoeffDistribution::from_polynomial(q_binomial(4, 2));
    CHECK(cumulants(d22, 2).kappa(2) == Rational(5L, 3L));
    CHECK(qmultinomial_cumulant_formula(Composition{2, 2}, 2) == Rational(5L, 3L));
    // First cumulant agrees with the mean/variance closed form.
    for (std::uint32_t N = 0; N <= 8; ++N)
        galoislab::qcombi::for_each_composition(
            N, 3, [&](const std::vector<std::uint32_t>& parts) {
                const Composition k(parts);
                const auto [mean, variance] = qmultinomial_mean_var_formula(k);
                CHECK(qmultinomial_cumulant_formula(k, 1) == mean);
                CHECK(qmultinomial_cumulant_formula(k, 2) == variance);
            });
    // Full agreement with empirical cumulants through order 6, over every
    // composition of N <= 15 into at most 4 parts.
    for (std::uint32_t r = 1; r <= 4; ++r)
        for (std::uint32_t N = 0; N <= 15; ++N)
            galoislab::qcombi::for_each_composition(
                N, r, [&](const std::vector<std::uint32_t>& parts) {
                    const Composition k(parts);
                    const auto d = CoeffDistribution::from_polynomial(q_multinomial(N, k));
                    const auto direct = cumulants(d, 6);
                    for (unsigned j = 1; j <= 6; ++j)
                        CHECK(qmultinomial_cumulant_formula(k, j) == direct.kappa(j));
                });
    CHECK_THROWS_AS(qmultinomial_cumulant_formula(5, Composition{1, 1}, 2), invalid_input);
}

TEST_CASE("central and sqrt-shifted compositions") {
    CHECK(central_composition(7, 3) == Composition{2, 2, 3});
    CHECK(central_composition(9, 3) == Composition{3, 3, 3});
    CHECK(central_composition(10, 4) == Composition{2, 2, 3, 3});
    CHECK(central_composition(0, 2) == Composition{0, 0});
    CHECK(sqrt_shifted_composition(16, 2) == Composition{12, 4});
}

TEST_CASE("cumulant scaling report approaches the known limits") {
    const std::vector<std::uint32_t> Ns = {20, 40, 80};
    const auto k1 = cumulant_order_check(CompositionSchedule::central, 1, 2, Ns,
                                         Rational(1L, 100L));
    CHECK(k1.has_limit);
    CHECK(k1.limit == Rational(1L, 8L));
    CHECK(k1.converged);
    const auto k2 = cumulant_order_check(CompositionSchedule::central, 2, 2, Ns,
                                         Rational(1L, 100L));
    CHECK(k2.limit == Rational(1L, 48L));
    CHECK(k2.converged);
    const auto k3 = cumulant_order_check(CompositionSchedule::central, 3, 2, Ns,
                                         Rational(1L, 100L));
    for (const auto& row : k3.rows) CHECK(row.kappa == Rational());
    // The sqrt-shifted schedule approaches the same limits.
    const auto s1 = cumulant_order_check(CompositionSchedule::sqrt_shifted, 1, 2,
                                         {40, 80, 160}, Rational(1L, 20L));
    CHECK(s1.converged);
}

TEST_CASE("normal cdf fixed-point values") {
    // Phi(0) = 1/2 exactly.
    CHECK(normal_cdf_fixed(Rational(), 12) == BigInteger("500000000000"));
    // Classical reference values, |error| < 1e-12 means the fixed integer
    // is within 1 of the truncated reference.
    auto within_one = [](const BigInteger& got, const char* expected) {
        const BigInteger e{std::string(expected)};
        return (got - e).abs() <= BigInteger(1);
    };
    CHECK(within_one(normal_cdf_fixed(Rational(1L), 12), "841344746068"));
    CHECK(within_one(normal_cdf_fixed(Rational(2L), 12), "977249868051"));
    CHECK(within_one(normal_cdf_fixed(Rational(-1L), 12), "158655253931"));
    CHECK(within_one(normal_cdf_fixed(Rational(1L, 2L), 12), "691462461274"));
    // Deep tail clamps to 0/1.
    CHECK(normal_cdf_fixed(Rational(40L), 12) == BigInteger("1000000000000"));
    CHECK(normal_cdf_fixed(Rational(-40L), 12) == BigInteger(0));
}

TEST_CASE("normal cdf agrees with Simpson quadrature of the density") {
    // Composite Simpson over [0, x] with 4000 panels: error well under 1e-9.
    auto phi_quadrature = [](double x) {
        const int panels = 4000;
        const double h = x / panels;
        auto density = [](double t) {
            return std::exp(-t * t / 2.0) / std::sqrt(2.0 * 3.14159265358979323846);
        };
        double sum = density(0) + density(x);
        for (int i = 1; i < panels; ++i)
            sum += density(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
        return 0.5 + sum * h / 3.0;
    };
    for (double x : {0.25, 0.75, 1.5, 2.5, 3.5}) {
        const Rational rx(static_cast<long>(x * 4), 4L);
        const BigInteger fixed = normal_cdf_fixed(rx, 12);
        const double got = std::stod(fixed.to_string()) * 1e-12;
        CHECK(std::abs(got - phi_quadrature(x)) < 1e-9);
    }
}

TEST_CASE("kolmogorov distance of the fair two-point law") {
    // Support standardizes to -1 and 1; the sup gap is Phi(1) - 1/2.
    const auto d = CoeffDistribution::from_polynomial(poly({1, 1}));
    const BigInteger ks = kolmogorov_distance_fixed(d, 12);
    CHECK((ks - BigInteger("341344746068")).abs() <= BigInteger(1));
}

TEST_CASE("normality report for the smallest nondegenerate case") {
    const auto report = normality_report(2, 2, 12);
    CHECK(report.mean == Rational(1L, 4L));
    CHECK(report.variance == Rational(3L, 16L));
    // Bernoulli(1/4): skewness^2 = (1-2p)^2/(pq) = 4/3, kurtosis excess
    // = (1-6pq)/(pq) = -2/3.
    CHECK(report.skewness_sq_signed == Rational(4L, 3L));
    CHECK(report.excess_kurtosis == Rational(-2L, 3L));
    CHECK(report.kolmogorov_string().size() == 14); // "0." + 12 digits
    CHECK_THROWS_AS(normality_report(1, 2, 12), invalid_input);
    CHECK_THROWS_AS(normality_report(5, 1, 12), invalid_input);
}

TEST_CASE("normality csv and json shapes") {
    const auto report = normality_report(4, 2, 12);
    CHECK(NormalityReport::csv_header() == "N,r,mean,variance,skew_sq,ex_kurtosis,kolmogorov");
    const std::string row = report.to_csv_row();
    CHECK(row.substr(0, 4) == "4,2,");
    CHECK(row.find("3/2") != std::string::npos);
    CHECK(row.find("13/8") != std::string::npos);
    const std::string json = report.to_json();
    CHECK(json.find("\"N\":4") != std::string::npos);
    CHECK(json.find("\"cdf_precision\":1e-12") != std::string::npos);
}

TEST_CASE("rogers szego covariance block structure") {
    const auto cov = rogers_szego_covariance(2, 2);
    REQUIRE(cov.size == 3);
    CHECK(cov.at(0, 0) == Rational(1L, 2L));
    CHECK(cov.at(1, 1) == Rational(1L, 2L));
    CHECK(cov.at(0, 1) == Rational(-1L, 2L));
    CHECK(cov.at(0, 2) == Rational());
    CHECK(cov.at(1, 2) == Rational());
    CHECK(cov.at(2, 2) == Rational(3L, 16L));
    for (std::uint32_t N = 1; N <= 6; ++N)
        for (std::uint32_t r = 2; r <= 3; ++r) {
            const auto c = rogers_szego_covariance(N, r);
            const Rational var_x(static_cast<long>(N) * (static_cast<long>(r) - 1),
                                 static_cast<long>(r) * r);
            const Rational cov_x(-static_cast<long>(N), static_cast<long>(r) * r);
            for (std::uint32_t i = 0; i < r; ++i) {
                CHECK(c.at(i, i) == var_x);
                CHECK(c.at(i, r) == Rational());
                Rational row_sum;
                for (std::uint32_t l = 0; l < r; ++l) {
                    row_sum += c.at(i, l);
                    if (l != i) CHECK(c.at(i, l) == cov_x);
                }
                CHECK(row_sum == Rational());
            }
            CHECK(c.at(r, r) == galois_mean_var_formula(N, r).second);
        }
}

TEST_SUITE_END();
