#ifndef GALOISLAB_QT_POLYNOMIAL_HPP
#define GALOISLAB_QT_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "galoislab/big_integer.hpp"
#include "galoislab/q_polynomial.hpp"
#include "galoislab/rational.hpp"

namespace galoislab {
namespace qpoly {

// Bivariate polynomial in q and t over BigInteger, stored sparsely. Keys
// are (t-exponent, q-exponent) pairs; iteration is lexicographic in that
// order and stored coefficients are never zero.
class QTPolynomial {
public:
    using Key = std::pair<std::uint32_t, std::uint32_t>; // (t_exp, q_exp)

    QTPolynomial() = default;
    QTPolynomial(long constant);
    // p(q) * t^t_exp
    QTPolynomial(const QPolynomial& p, std::uint32_t t_exp = 0);

    static QTPolynomial monomial(const BigInteger& coefficient, std::uint32_t q_exp,
                                 std::uint32_t t_exp);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, BigInteger>& terms() const { return terms_; }
    BigInteger coeff(std::uint32_t q_exp, std::uint32_t t_exp) const;

    void add_term(const BigInteger& coefficient, std::uint32_t q_exp, std::uint32_t t_exp);

    QTPolynomial& operator+=(const QTPolynomial& o);
    QTPolynomial& operator-=(const QTPolynomial& o);
    friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial& b) { a += b; return a; }
    friend QTPolynomial operator-(QTPolynomial a, const QTPolynomial& b) { a -= b; return a; }
    friend QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b);
    QTPolynomial operator-() const;

    QTPolynomial pow(unsigned exponent) const;

    // Substitute t = 1, collapsing to a univariate polynomial in q.
    QPolynomial specialize_t_one() const;
    Rational eval(const Rational& q, const Rational& t) const;

    friend bool operator==(const QTPolynomial& a, const QTPolynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const QTPolynomial& a, const QTPolynomial& b) { return !(a == b); }

    // Ascending (t, q) order, e.g. "3 + q*t".
    std::string to_string() const;

private:
    std::map<Key, BigInteger> terms_;
};

} // namespace qpoly
} // namespace galoislab

#endif
