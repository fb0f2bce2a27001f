#ifndef GALOISLAB_BIG_INTEGER_HPP
#define GALOISLAB_BIG_INTEGER_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmp.h>

namespace galoislab {
namespace exact {

// Arbitrary-precision signed integer with value semantics. Backed by GMP's
// sign-magnitude mpz_t; arithmetic is exact, overflow is never observable.
class BigInteger {
public:
    BigInteger() noexcept { mpz_init(value_); }
    BigInteger(long v) { mpz_init_set_si(value_, v); }
    BigInteger(unsigned long v) { mpz_init_set_ui(value_, v); }
    BigInteger(int v) : BigInteger(static_cast<long>(v)) {}
    BigInteger(unsigned v) : BigInteger(static_cast<unsigned long>(v)) {}
    explicit BigInteger(const std::string& decimal);

    BigInteger(const BigInteger& other) { mpz_init_set(value_, other.value_); }
    BigInteger(BigInteger&& other) noexcept {
        mpz_init(value_);
        mpz_swap(value_, other.value_);
    }
    BigInteger& operator=(const BigInteger& other) {
        if (this != &other) mpz_set(value_, other.value_);
        return *this;
    }
    BigInteger& operator=(BigInteger&& other) noexcept {
        mpz_swap(value_, other.value_);
        return *this;
    }
    ~BigInteger() { mpz_clear(value_); }

    BigInteger& operator+=(const BigInteger& o) { mpz_add(value_, value_, o.value_); return *this; }
    BigInteger& operator-=(const BigInteger& o) { mpz_sub(value_, value_, o.value_); return *this; }
    BigInteger& operator*=(const BigInteger& o) { mpz_mul(value_, value_, o.value_); return *this; }
    BigInteger& operator*=(unsigned long o) { mpz_mul_ui(value_, value_, o); return *this; }

    friend BigInteger operator+(BigInteger a, const BigInteger& b) { a += b; return a; }
    friend BigInteger operator-(BigInteger a, const BigInteger& b) { a -= b; return a; }
    friend BigInteger operator*(BigInteger a, const BigInteger& b) { a *= b; return a; }
    BigInteger operator-() const {
        BigInteger r(*this);
        mpz_neg(r.value_, r.value_);
        return r;
    }

    // this += a * b, without a temporary.
    void add_mul(const BigInteger& a, const BigInteger& b) { mpz_addmul(value_, a.value_, b.value_); }
    void sub_mul(const BigInteger& a, const BigInteger& b) { mpz_submul(value_, a.value_, b.value_); }

    // Truncated division (C++ semantics). Divisor must be nonzero.
    BigInteger quotient(const BigInteger& divisor) const;
    BigInteger remainder(const BigInteger& divisor) const;
    // Exact division; throws invalid_input when the divisor does not divide.
    BigInteger div_exact(const BigInteger& divisor) const;
    bool divisible_by(const BigInteger& divisor) const {
        return mpz_divisible_p(value_, divisor.value_) != 0;
    }

    friend bool operator==(const BigInteger& a, const BigInteger& b) {
        return mpz_cmp(a.value_, b.value_) == 0;
    }
    friend bool operator!=(const BigInteger& a, const BigInteger& b) { return !(a == b); }
    friend bool operator<(const BigInteger& a, const BigInteger& b) {
        return mpz_cmp(a.value_, b.value_) < 0;
    }
    friend bool operator>(const BigInteger& a, const BigInteger& b) { return b < a; }
    friend bool operator<=(const BigInteger& a, const BigInteger& b) { return !(b < a); }
    friend bool operator>=(const BigInteger& a, const BigInteger& b) { return !(a < b); }

    int sign() const { return mpz_sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    BigInteger abs() const {
        BigInteger r(*this);
        mpz_abs(r.value_, r.value_);
        return r;
    }

    bool fits_ulong() const { return mpz_fits_ulong_p(value_) != 0; }
    unsigned long to_ulong() const;
    std::string to_string() const;

    static BigInteger gcd(const BigInteger& a, const BigInteger& b) {
        BigInteger r;
        mpz_gcd(r.value_, a.value_, b.value_);
        return r;
    }
    static BigInteger pow(const BigInteger& base, unsigned long exp) {
        BigInteger r;
        mpz_pow_ui(r.value_, base.value_, exp);
        return r;
    }
    // Integer square root of a nonnegative value, rounded down.
    static BigInteger isqrt(const BigInteger& a);

    // Raw handle for the Rational implementation.
    mpz_srcptr raw() const { return value_; }
    mpz_ptr raw() { return value_; }

private:
    mpz_t value_;
};

std::ostream& operator<<(std::ostream& os, const BigInteger& v);

BigInteger factorial(unsigned long n);
// 10^exp, used by the fixed-point layer.
BigInteger pow10(unsigned long exp);

} // namespace exact
} // namespace galoislab

#endif
