#include "galoislab/rational.hpp"

#include <ostream>

#include "galoislab/errors.hpp"

namespace galoislab {
namespace exact {

Rational::Rational(const BigInteger& num, const BigInteger& den) {
    if (den.is_zero()) throw invalid_input("rational with zero denominator");
    mpq_init(value_);
    mpz_set(mpq_numref(value_), num.raw());
    mpz_set(mpq_denref(value_), den.raw());
    mpq_canonicalize(value_);
}

Rational::Rational(long num, long den) : Rational(BigInteger(num), BigInteger(den)) {}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw invalid_input("division by zero");
    mpq_div(value_, value_, o.value_);
    return *this;
}

bool Rational::is_integer() const {
    return mpz_cmp_ui(mpq_denref(value_), 1) == 0;
}

Rational Rational::pow(unsigned long exp) const {
    Rational r(1L);
    mpz_pow_ui(mpq_numref(r.value_), mpq_numref(value_), exp);
    mpz_pow_ui(mpq_denref(r.value_), mpq_denref(value_), exp);
    return r;
}

BigInteger Rational::numerator() const {
    BigInteger r;
    mpz_set(r.raw(), mpq_numref(value_));
    return r;
}

BigInteger Rational::denominator() const {
    BigInteger r;
    mpz_set(r.raw(), mpq_denref(value_));
    return r;
}

BigInteger Rational::to_integer() const {
    if (!is_integer()) throw invalid_input("not an integer: " + to_string());
    return numerator();
}

std::string Rational::to_string() const {
    std::string s = numerator().to_string();
    if (!is_integer()) s += "/" + denominator().to_string();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) {
    return os << v.to_string();
}

} // namespace exact
} // namespace galoislab
