#ifndef GALOISLAB_TRUNCATED_SERIES_HPP
#define GALOISLAB_TRUNCATED_SERIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "galoislab/errors.hpp"
#include "galoislab/q_polynomial.hpp"
#include "galoislab/qt_polynomial.hpp"
#include "galoislab/rational.hpp"

namespace galoislab {
namespace qpoly {

// Formal power series in u truncated at a fixed order M; arithmetic is
// exact modulo u^(M+1). The coefficient type C is any exact ring value
// (Rational, QPolynomial, QTPolynomial).
template <typename C>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

    std::size_t order() const { return coeffs_.size() - 1; }
    const C& coeff(std::size_t i) const { return coeffs_.at(i); }
    void set_coeff(std::size_t i, C value) { coeffs_.at(i) = std::move(value); }

    static TruncatedSeries one(std::size_t order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = C(1L);
        return s;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        a += b;
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        a -= b;
        return a;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i)
            for (std::size_t j = 0; i + j <= a.order(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

private:
    void check_order(const TruncatedSeries& o) const {
        if (coeffs_.size() != o.coeffs_.size())
            throw invalid_input("series truncation orders differ");
    }
    std::vector<C> coeffs_;
};

namespace detail {

inline Rational invert_constant(const Rational& c) {
    if (c.is_zero()) throw invalid_input("series not invertible");
    return Rational(1L) / c;
}

// Over integer polynomials only unit constants are invertible.
inline QPolynomial invert_constant(const QPolynomial& c) {
    if (c.degree() == 0 && (c.coeff(0) == BigInteger(1) || c.coeff(0) == BigInteger(-1)))
        return c;
    throw invalid_input("series not invertible");
}

} // namespace detail

// Multiplicative inverse modulo u^(M+1); the constant term must be a unit.
template <typename C>
TruncatedSeries<C> inverse(const TruncatedSeries<C>& a) {
    const C c0_inv = detail::invert_constant(a.coeff(0));
    TruncatedSeries<C> r(a.order());
    r.set_coeff(0, c0_inv);
    for (std::size_t n = 1; n <= a.order(); ++n) {
        C acc{};
        for (std::size_t k = 1; k <= n; ++k) acc += a.coeff(k) * r.coeff(n - k);
        r.set_coeff(n, C{} - c0_inv * acc);
    }
    return r;
}

} // namespace qpoly
} // namespace galoislab

#endif
