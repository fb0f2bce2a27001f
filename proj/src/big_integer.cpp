#include "galoislab/big_integer.hpp"

#include <ostream>

#include "galoislab/errors.hpp"

namespace galoislab {
namespace exact {

BigInteger::BigInteger(const std::string& decimal) {
    if (mpz_init_set_str(value_, decimal.c_str(), 10) != 0) {
        mpz_clear(value_);
        throw invalid_input("not a decimal integer: '" + decimal + "'");
    }
}

BigInteger BigInteger::quotient(const BigInteger& divisor) const {
    if (divisor.is_zero()) throw invalid_input("division by zero");
    BigInteger r;
    mpz_tdiv_q(r.value_, value_, divisor.value_);
    return r;
}

BigInteger BigInteger::remainder(const BigInteger& divisor) const {
    if (divisor.is_zero()) throw invalid_input("division by zero");
    BigInteger r;
    mpz_tdiv_r(r.value_, value_, divisor.value_);
    return r;
}

BigInteger BigInteger::div_exact(const BigInteger& divisor) const {
    if (divisor.is_zero()) throw invalid_input("division by zero");
    if (!divisible_by(divisor))
        throw invalid_input("inexact division: " + to_string() + " / " + divisor.to_string());
    BigInteger r;
    mpz_divexact(r.value_, value_, divisor.value_);
    return r;
}

unsigned long BigInteger::to_ulong() const {
    if (!fits_ulong()) throw invalid_input("value does not fit in unsigned long: " + to_string());
    return mpz_get_ui(value_);
}

std::string BigInteger::to_string() const {
    const std::size_t n = mpz_sizeinbase(value_, 10) + 2;
    std::string buf(n, '\0');
    mpz_get_str(buf.data(), 10, value_);
    buf.resize(buf.find('\0'));
    return buf;
}

BigInteger BigInteger::isqrt(const BigInteger& a) {
    if (a.sign() < 0) throw invalid_input("isqrt of negative value");
    BigInteger r;
    mpz_sqrt(r.value_, a.value_);
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigInteger& v) {
    return os << v.to_string();
}

BigInteger factorial(unsigned long n) {
    BigInteger r;
    mpz_fac_ui(r.raw(), n);
    return r;
}

BigInteger pow10(unsigned long exp) {
    BigInteger r;
    mpz_ui_pow_ui(r.raw(), 10, exp);
    return r;
}

} // namespace exact
} // namespace galoislab
