#include "galoislab/q_polynomial.hpp"

#include <ostream>

#include "galoislab/errors.hpp"

namespace galoislab {
namespace qpoly {

namespace {
const BigInteger k_zero(0);
}

QPolynomial::QPolynomial(long constant) {
    if (constant != 0) coefficients_.push_back(BigInteger(constant));
}

QPolynomial::QPolynomial(const BigInteger& constant) {
    if (!constant.is_zero()) coefficients_.push_back(constant);
}

QPolynomial::QPolynomial(std::vector<BigInteger> coefficients)
    : coefficients_(std::move(coefficients)) {
    normalize();
}

QPolynomial QPolynomial::monomial(const BigInteger& coefficient, std::size_t exponent) {
    QPolynomial p;
    if (!coefficient.is_zero()) {
        p.coefficients_.resize(exponent + 1);
        p.coefficients_[exponent] = coefficient;
    }
    return p;
}

void QPolynomial::normalize() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

const BigInteger& QPolynomial::coeff(std::size_t exponent) const {
    if (exponent >= coefficients_.size()) return k_zero;
    return coefficients_[exponent];
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    if (coefficients_.size() < o.coefficients_.size())
        coefficients_.resize(o.coefficients_.size());
    for (std::size_t i = 0; i < o.coefficients_.size(); ++i)
        coefficients_[i] += o.coefficients_[i];
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    if (coefficients_.size() < o.coefficients_.size())
        coefficients_.resize(o.coefficients_.size());
    for (std::size_t i = 0; i < o.coefficients_.size(); ++i)
        coefficients_[i] -= o.coefficients_[i];
    normalize();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return QPolynomial();
    QPolynomial r;
    r.coefficients_.resize(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        if (a.coefficients_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
            r.coefficients_[i + j].add_mul(a.coefficients_[i], b.coefficients_[j]);
    }
    // Leading coefficients are nonzero, so no normalization is needed.
    return r;
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial r;
    r.coefficients_.reserve(coefficients_.size());
    for (const auto& c : coefficients_) r.coefficients_.push_back(-c);
    return r;
}

QPolynomial QPolynomial::scaled(const BigInteger& factor) const {
    QPolynomial r;
    if (factor.is_zero()) return r;
    r.coefficients_.reserve(coefficients_.size());
    for (const auto& c : coefficients_) r.coefficients_.push_back(c * factor);
    return r;
}

void QPolynomial::add_scaled_shifted(const QPolynomial& other, const BigInteger& factor,
                                     std::size_t shift) {
    if (other.is_zero() || factor.is_zero()) return;
    if (this == &other && shift > 0) {
        // A shifted self-add would read entries already written this pass.
        const QPolynomial copy(other);
        add_scaled_shifted(copy, factor, shift);
        return;
    }
    const std::size_t needed = other.coefficients_.size() + shift;
    if (coefficients_.size() < needed) coefficients_.resize(needed);
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
        coefficients_[i + shift].add_mul(other.coefficients_[i], factor);
    normalize();
}

QPolynomial QPolynomial::derivative(unsigned order) const {
    QPolynomial r = *this;
    for (unsigned pass = 0; pass < order; ++pass) {
        if (r.coefficients_.empty()) return QPolynomial();
        std::vector<BigInteger> d;
        d.reserve(r.coefficients_.size() - 1);
        for (std::size_t i = 1; i < r.coefficients_.size(); ++i)
            d.push_back(r.coefficients_[i] * BigInteger(static_cast<unsigned long>(i)));
        r = QPolynomial(std::move(d));
    }
    return r;
}

Rational QPolynomial::eval(const Rational& x) const {
    Rational acc;
    for (std::size_t i = coefficients_.size(); i-- > 0;)
        acc = acc * x + Rational(coefficients_[i]);
    return acc;
}

BigInteger QPolynomial::eval_integer(const BigInteger& x) const {
    BigInteger acc;
    for (std::size_t i = coefficients_.size(); i-- > 0;) {
        acc *= x;
        acc += coefficients_[i];
    }
    return acc;
}

BigInteger QPolynomial::value_at_one() const {
    BigInteger acc;
    for (const auto& c : coefficients_) acc += c;
    return acc;
}

bool QPolynomial::is_palindromic() const {
    const std::size_t n = coefficients_.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (coefficients_[i] != coefficients_[n - 1 - i]) return false;
    return true;
}

std::string QPolynomial::to_string() const {
    if (coefficients_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t e = 0; e < coefficients_.size(); ++e) {
        const BigInteger& c = coefficients_[e];
        if (c.is_zero()) continue;
        const BigInteger mag = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const bool unit = mag == BigInteger(1);
        if (e == 0) {
            out += mag.to_string();
        } else {
            if (!unit) out += mag.to_string() + "*";
            out += e == 1 ? "q" : "q^" + std::to_string(e);
        }
    }
    return out;
}

std::string QPolynomial::to_json() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (i) out += ",";
        out += "\"" + coefficients_[i].to_string() + "\"";
    }
    return out + "]";
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) {
    return os << p.to_string();
}

} // namespace qpoly
} // namespace galoislab
