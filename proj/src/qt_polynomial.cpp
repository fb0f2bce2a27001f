#include "galoislab/qt_polynomial.hpp"

namespace galoislab {
namespace qpoly {

QTPolynomial::QTPolynomial(long constant) {
    if (constant != 0) terms_[{0, 0}] = BigInteger(constant);
}

QTPolynomial::QTPolynomial(const QPolynomial& p, std::uint32_t t_exp) {
    for (std::size_t e = 0; e < p.coefficients().size(); ++e)
        if (!p.coefficients()[e].is_zero())
            terms_[{t_exp, static_cast<std::uint32_t>(e)}] = p.coefficients()[e];
}

QTPolynomial QTPolynomial::monomial(const BigInteger& coefficient, std::uint32_t q_exp,
                                    std::uint32_t t_exp) {
    QTPolynomial p;
    if (!coefficient.is_zero()) p.terms_[{t_exp, q_exp}] = coefficient;
    return p;
}

BigInteger QTPolynomial::coeff(std::uint32_t q_exp, std::uint32_t t_exp) const {
    auto it = terms_.find({t_exp, q_exp});
    return it == terms_.end() ? BigInteger(0) : it->second;
}

void QTPolynomial::add_term(const BigInteger& coefficient, std::uint32_t q_exp,
                            std::uint32_t t_exp) {
    if (coefficient.is_zero()) return;
    const Key key{t_exp, q_exp};
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QTPolynomial& QTPolynomial::operator+=(const QTPolynomial& o) {
    if (this == &o) {
        for (auto& [key, c] : terms_) c += c;
        return *this;
    }
    for (const auto& [key, c] : o.terms_) add_term(c, key.second, key.first);
    return *this;
}

QTPolynomial& QTPolynomial::operator-=(const QTPolynomial& o) {
    if (this == &o) {
        terms_.clear();
        return *this;
    }
    for (const auto& [key, c] : o.terms_) add_term(-c, key.second, key.first);
    return *this;
}

QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b) {
    QTPolynomial r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ca * cb, ka.second + kb.second, ka.first + kb.first);
    return r;
}

QTPolynomial QTPolynomial::operator-() const {
    QTPolynomial r;
    for (const auto& [key, c] : terms_) r.terms_[key] = -c;
    return r;
}

QTPolynomial QTPolynomial::pow(unsigned exponent) const {
    QTPolynomial r(1L);
    for (unsigned i = 0; i < exponent; ++i) r = r * *this;
    return r;
}

QPolynomial QTPolynomial::specialize_t_one() const {
    QPolynomial r;
    for (const auto& [key, c] : terms_)
        r.add_scaled_shifted(QPolynomial(1L), c, key.second);
    return r;
}

Rational QTPolynomial::eval(const Rational& q, const Rational& t) const {
    Rational acc;
    for (const auto& [key, c] : terms_)
        acc += Rational(c) * t.pow(key.first) * q.pow(key.second);
    return acc;
}

std::string QTPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        const auto [t_exp, q_exp] = key;
        const BigInteger mag = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string vars;
        if (q_exp == 1) vars = "q";
        else if (q_exp > 1) vars = "q^" + std::to_string(q_exp);
        if (t_exp >= 1) {
            if (!vars.empty()) vars += "*";
            vars += t_exp == 1 ? "t" : "t^" + std::to_string(t_exp);
        }
        const bool unit = mag == BigInteger(1);
        if (vars.empty()) {
            out += mag.to_string();
        } else {
            if (!unit) out += mag.to_string() + "*";
            out += vars;
        }
    }
    return out;
}

} // namespace qpoly
} // namespace galoislab
