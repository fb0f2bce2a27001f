#ifndef GALOISLAB_Q_POLYNOMIAL_HPP
#define GALOISLAB_Q_POLYNOMIAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "galoislab/big_integer.hpp"
#include "galoislab/rational.hpp"

namespace galoislab {
namespace qpoly {

using exact::BigInteger;
using exact::Rational;

// Polynomial in q with BigInteger coefficients, stored densely by exponent.
// Normal form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector. Coefficient reads outside the range give 0.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(long constant); // NOLINT: implicit by design, matches integer literals
    explicit QPolynomial(const BigInteger& constant);
    explicit QPolynomial(std::vector<BigInteger> coefficients);

    static QPolynomial monomial(const BigInteger& coefficient, std::size_t exponent);

    // Degree of the zero polynomial is -1.
    std::int64_t degree() const { return static_cast<std::int64_t>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }

    const BigInteger& coeff(std::size_t exponent) const;
    const std::vector<BigInteger>& coefficients() const { return coefficients_; }

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { a += b; return a; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { a -= b; return a; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    QPolynomial& operator*=(const QPolynomial& o) { *this = *this * o; return *this; }
    QPolynomial operator-() const;

    QPolynomial scaled(const BigInteger& factor) const;
    // this += factor * q^shift * other; the convolution workhorse.
    void add_scaled_shifted(const QPolynomial& other, const BigInteger& factor, std::size_t shift);

    QPolynomial derivative(unsigned order = 1) const;

    Rational eval(const Rational& x) const;
    BigInteger eval_integer(const BigInteger& x) const;
    // Sum of coefficients, i.e. the value at q = 1.
    BigInteger value_at_one() const;

    bool is_palindromic() const;

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
        return a.coefficients_ == b.coefficients_;
    }
    friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }

    // Canonical text form in ascending powers: "3 + 2*q + q^2"; "0" when zero.
    std::string to_string() const;
    // JSON array of decimal coefficient strings, ascending exponents.
    std::string to_json() const;

private:
    void normalize();
    std::vector<BigInteger> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const QPolynomial& p);

} // namespace qpoly
} // namespace galoislab

#endif
