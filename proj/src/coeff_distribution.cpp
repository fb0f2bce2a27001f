#include "galoislab/coeff_distribution.hpp"

#include "galoislab/errors.hpp"
#include "galoislab/q_combinatorics.hpp"

namespace galoislab {
namespace stats {

CoeffDistribution CoeffDistribution::from_polynomial(const QPolynomial& p) {
    if (p.is_zero()) throw invalid_input("cannot normalize the zero polynomial");
    for (const auto& c : p.coefficients())
        if (c.sign() < 0)
            throw invalid_input("polynomial has a negative coefficient");
    return CoeffDistribution(p.coefficients(), p.value_at_one());
}

Rational CoeffDistribution::mass(std::size_t j) const {
    if (j >= weights_.size()) return Rational();
    return Rational(weights_[j], total_);
}

Rational CoeffDistribution::raw_moment(unsigned alpha) const {
    BigInteger acc(0);
    for (std::size_t j = 0; j < weights_.size(); ++j)
        acc.add_mul(weights_[j], BigInteger::pow(BigInteger(static_cast<unsigned long>(j)), alpha));
    return Rational(acc, total_);
}

std::vector<Rational> CoeffDistribution::moments(unsigned J) const {
    std::vector<Rational> out;
    out.reserve(J);
    // One sweep: powers j^alpha updated incrementally.
    std::vector<BigInteger> acc(J, BigInteger(0));
    for (std::size_t j = 0; j < weights_.size(); ++j) {
        if (weights_[j].is_zero()) continue;
        BigInteger power(1);
        const BigInteger base(static_cast<unsigned long>(j));
        for (unsigned a = 0; a < J; ++a) {
            power *= base;
            acc[a].add_mul(weights_[j], power);
        }
    }
    for (unsigned a = 0; a < J; ++a) out.push_back(Rational(acc[a], total_));
    return out;
}

CumulantVector cumulants_from_moments(const std::vector<Rational>& raw_moments) {
    const unsigned J = static_cast<unsigned>(raw_moments.size());
    CumulantVector cv;
    cv.order = J;
    cv.values.reserve(J);
    std::vector<Rational> m(J + 1);
    m[0] = Rational(1L);
    for (unsigned i = 1; i <= J; ++i) m[i] = raw_moments[i - 1];
    for (unsigned n = 1; n <= J; ++n) {
        Rational acc = m[n];
        for (unsigned i = 1; i < n; ++i)
            acc -= Rational(qcombi::binomial(n - 1, i - 1)) * cv.values[i - 1] * m[n - i];
        cv.values.push_back(acc);
    }
    return cv;
}

std::vector<Rational> moments_from_cumulants(const CumulantVector& cumulants) {
    const unsigned J = cumulants.order;
    std::vector<Rational> m(J + 1);
    m[0] = Rational(1L);
    for (unsigned n = 1; n <= J; ++n) {
        Rational acc;
        for (unsigned i = 1; i <= n; ++i)
            acc += Rational(qcombi::binomial(n - 1, i - 1)) * cumulants.values[i - 1] * m[n - i];
        m[n] = acc;
    }
    return std::vector<Rational>(m.begin() + 1, m.end());
}

CumulantVector cumulants(const CoeffDistribution& d, unsigned J) {
    return cumulants_from_moments(d.moments(J));
}

} // namespace stats
} // namespace galoislab
