#include "galoislab/applications.hpp"

#include "galoislab/errors.hpp"
#include "galoislab/moment_formulas.hpp"
#include "galoislab/permutation_stats.hpp"
#include "galoislab/q_combinatorics.hpp"

namespace galoislab {
namespace apps {

namespace {

// q = p^a with p prime, a >= 1; throws otherwise.
std::pair<std::uint64_t, std::uint32_t> prime_power_split(std::uint64_t q) {
    if (q < 2) throw invalid_input(std::to_string(q) + " is not a prime power");
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {q, 1}; // q itself is prime
    std::uint64_t rest = q;
    std::uint32_t a = 0;
    while (rest % p == 0) {
        rest /= p;
        ++a;
    }
    if (rest != 1) throw invalid_input(std::to_string(q) + " is not a prime power");
    return {p, a};
}

} // namespace

std::string CodeCountAsymptotics::to_json() const {
    std::string out = "{";
    out += "\"n\":" + std::to_string(n);
    out += ",\"q\":" + std::to_string(q);
    out += ",\"p\":" + std::to_string(p);
    out += ",\"a\":" + std::to_string(a);
    out += ",\"numerator\":" + numerator.to_json();
    out += ",\"asymptotic_estimates\":{";
    out += "\"permutation\":\"" + permutation_estimate.to_string() + "\"";
    out += ",\"monomial\":\"" + monomial_estimate.to_string() + "\"";
    out += ",\"semilinear\":\"" + semilinear_estimate.to_string() + "\"}";
    return out + "}";
}

CodeCountAsymptotics code_count_asymptotics(std::uint32_t n, std::uint64_t q) {
    const auto [p, a] = prime_power_split(q);
    CodeCountAsymptotics result;
    result.n = n;
    result.q = q;
    result.p = p;
    result.a = a;
    // Numerator: (n+1) * row_0 + row_1 of the descent-bucketed inversion
    // table, i.e. permutations with at most one descent, weighted by
    // C(n+1-des, n).
    const permstat::DescentInvTable table = permstat::descent_inv_table(n);
    QPolynomial numerator = table.polynomial_for(0).scaled(
        qcombi::binomial(static_cast<std::int64_t>(n) + 1, n));
    numerator += table.polynomial_for(1);
    result.numerator = numerator;
    const BigInteger value = numerator.eval_integer(BigInteger(q));
    const BigInteger nfact = exact::factorial(n);
    const BigInteger qm1_pow =
        n >= 1 ? BigInteger::pow(BigInteger(q - 1), n - 1) : BigInteger(1);
    result.permutation_estimate = Rational(value, nfact);
    result.monomial_estimate = Rational(value, nfact * qm1_pow);
    result.semilinear_estimate =
        Rational(value, nfact * qm1_pow * BigInteger(static_cast<unsigned long>(a)));
    return result;
}

std::pair<std::uint32_t, BigInteger> demazure_d(std::uint32_t N, std::uint32_t r) {
    if (r < 2) throw invalid_input("demazure_d requires r >= 2");
    const std::uint32_t i = N % r;
    // d_r(N) = N(N-1)/2 - (N-i)(N+i-r)/(2r)
    const BigInteger bn(static_cast<unsigned long>(N));
    const Rational d =
        Rational(bn * BigInteger(static_cast<long>(N) - 1), BigInteger(2)) -
        Rational(BigInteger(static_cast<long>(N) - i) *
                     BigInteger(static_cast<std::int64_t>(N) + i - r),
                 BigInteger(2) * BigInteger(static_cast<unsigned long>(r)));
    return {i, d.to_integer()};
}

std::string DemazureSpecialization::to_json() const {
    std::string out = "{";
    out += "\"N\":" + std::to_string(N);
    out += ",\"r\":" + std::to_string(r);
    out += ",\"i\":" + std::to_string(i);
    out += ",\"degree_shift\":\"" + degree_shift.to_string() + "\"";
    out += ",\"polynomial\":" + polynomial.to_json();
    return out + "}";
}

DemazureSpecialization demazure_basic_specialization(std::uint32_t N, std::uint32_t r) {
    const auto [i, d] = demazure_d(N, r);
    DemazureSpecialization result;
    result.N = N;
    result.r = r;
    result.i = i;
    result.degree_shift = d;
    result.polynomial = qcombi::galois_number(N, r);
    return result;
}

std::pair<Rational, Rational> demazure_gamma_moments(std::uint32_t N, std::uint32_t r) {
    if (r < 2) throw invalid_input("demazure_gamma_moments requires r >= 2");
    const std::uint32_t i = N % r;
    const BigInteger bn(static_cast<unsigned long>(N));
    const Rational mean(
        BigInteger(static_cast<unsigned long>(r) + 1) * bn *
                BigInteger(static_cast<long>(N) - 1) -
            BigInteger(2) * BigInteger(static_cast<long>(N) - i) *
                BigInteger(static_cast<std::int64_t>(N) + i - r),
        BigInteger(4) * BigInteger(static_cast<unsigned long>(r)));
    const Rational variance = stats::galois_mean_var_formula(N, r).second;
    return {mean, variance};
}

} // namespace apps
} // namespace galoislab
