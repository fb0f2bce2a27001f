#ifndef GALOISLAB_COEFF_DISTRIBUTION_HPP
#define GALOISLAB_COEFF_DISTRIBUTION_HPP

#include <cstdint>
#include <vector>

#include "galoislab/big_integer.hpp"
#include "galoislab/q_polynomial.hpp"
#include "galoislab/rational.hpp"

namespace galoislab {
namespace stats {

using exact::BigInteger;
using exact::Rational;
using qpoly::QPolynomial;

// Probability distribution on {0, 1, ..., D} with exact rational masses,
// stored as integer weights over a common total. Obtained by normalizing a
// nonnegative polynomial by its value at q = 1.
class CoeffDistribution {
public:
    static CoeffDistribution from_polynomial(const QPolynomial& p);

    std::size_t support_size() const { return weights_.size(); }
    const std::vector<BigInteger>& weights() const { return weights_; }
    const BigInteger& total() const { return total_; }
    Rational mass(std::size_t j) const;

    // Raw moment E[X^alpha]; alpha = 0 gives 1.
    Rational raw_moment(unsigned alpha) const;
    // Raw moments E[X^1], ..., E[X^J].
    std::vector<Rational> moments(unsigned J) const;

private:
    CoeffDistribution(std::vector<BigInteger> weights, BigInteger total)
        : weights_(std::move(weights)), total_(std::move(total)) {}
    std::vector<BigInteger> weights_;
    BigInteger total_;
};

// kappa_1, ..., kappa_J of a distribution; kappa_2 is the variance.
struct CumulantVector {
    unsigned order = 0;
    std::vector<Rational> values; // values[j-1] = kappa_j

    const Rational& kappa(unsigned j) const { return values.at(j - 1); }
};

// Cumulants from raw moments by the standard recursion
// kappa_n = m_n - sum_{i<n} C(n-1, i-1) kappa_i m_(n-i).
CumulantVector cumulants_from_moments(const std::vector<Rational>& raw_moments);
// Inverse direction; reproduces the raw moments exactly.
std::vector<Rational> moments_from_cumulants(const CumulantVector& cumulants);

CumulantVector cumulants(const CoeffDistribution& d, unsigned J);

} // namespace stats
} // namespace galoislab

#endif
