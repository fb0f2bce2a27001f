#ifndef GALOISLAB_BERNOULLI_HPP
#define GALOISLAB_BERNOULLI_HPP

#include <vector>

#include "galoislab/rational.hpp"

namespace galoislab {
namespace exact {

// j-th Bernoulli number under the convention B_1 = -1/2, via the defining
// recurrence sum_{i=0}^{j} C(j+1,i) B_i = 0. Values are cached process-wide.
Rational bernoulli_number(unsigned j);

// B_j(x) = sum_i C(j,i) B_i x^(j-i), exact.
Rational bernoulli_polynomial_eval(unsigned j, const Rational& x);

// Coefficients of B_j(x) in ascending powers of x. The leading coefficient
// is 1 and the constant term is B_j.
class BernoulliPolynomial {
public:
    explicit BernoulliPolynomial(unsigned degree);

    unsigned degree() const { return degree_; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    Rational eval(const Rational& x) const;

private:
    unsigned degree_;
    std::vector<Rational> coefficients_;
};

} // namespace exact
} // namespace galoislab

#endif
