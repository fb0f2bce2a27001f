#include "galoislab/bernoulli.hpp"

#include <mutex>

namespace galoislab {
namespace exact {

namespace {

// C(n, k) for small machine-sized n, exact.
BigInteger binom_ui(unsigned long n, unsigned long k) {
    BigInteger r;
    mpz_bin_uiui(r.raw(), n, k);
    return r;
}

} // namespace

Rational bernoulli_number(unsigned j) {
    static std::vector<Rational> cache = {Rational(1L), Rational(-1L, 2L)};
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    while (cache.size() <= j) {
        const unsigned long m = cache.size();
        // B_m = -1/(m+1) * sum_{i<m} C(m+1, i) B_i
        Rational acc;
        for (unsigned long i = 0; i < m; ++i)
            acc += Rational(binom_ui(m + 1, i)) * cache[i];
        cache.push_back(-acc / Rational(static_cast<long>(m + 1)));
    }
    return cache[j];
}

BernoulliPolynomial::BernoulliPolynomial(unsigned degree) : degree_(degree) {
    coefficients_.resize(degree + 1);
    // Coefficient of x^(j-i) is C(j,i) B_i.
    for (unsigned i = 0; i <= degree; ++i)
        coefficients_[degree - i] = Rational(binom_ui(degree, i)) * bernoulli_number(i);
}

Rational BernoulliPolynomial::eval(const Rational& x) const {
    Rational acc;
    for (std::size_t i = coefficients_.size(); i-- > 0;) acc = acc * x + coefficients_[i];
    return acc;
}

Rational bernoulli_polynomial_eval(unsigned j, const Rational& x) {
    return BernoulliPolynomial(j).eval(x);
}

} // namespace exact
} // namespace galoislab
