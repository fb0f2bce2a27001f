#ifndef GALOISLAB_RATIONAL_HPP
#define GALOISLAB_RATIONAL_HPP

#include <iosfwd>
#include <string>

#include <gmp.h>

#include "galoislab/big_integer.hpp"

namespace galoislab {
namespace exact {

// Exact rational number, always reduced to lowest terms with a positive
// denominator. Canonicalization happens eagerly after every operation, so
// equality and hashing are structural.
class Rational {
public:
    Rational() noexcept { mpq_init(value_); }
    Rational(long v) {
        mpq_init(value_);
        mpq_set_si(value_, v, 1);
    }
    Rational(int v) : Rational(static_cast<long>(v)) {}
    Rational(const BigInteger& v) {
        mpq_init(value_);
        mpq_set_z(value_, v.raw());
    }
    Rational(const BigInteger& num, const BigInteger& den);
    Rational(long num, long den);

    Rational(const Rational& other) {
        mpq_init(value_);
        mpq_set(value_, other.value_);
    }
    Rational(Rational&& other) noexcept {
        mpq_init(value_);
        mpq_swap(value_, other.value_);
    }
    Rational& operator=(const Rational& other) {
        if (this != &other) mpq_set(value_, other.value_);
        return *this;
    }
    Rational& operator=(Rational&& other) noexcept {
        mpq_swap(value_, other.value_);
        return *this;
    }
    ~Rational() { mpq_clear(value_); }

    Rational& operator+=(const Rational& o) { mpq_add(value_, value_, o.value_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(value_, value_, o.value_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(value_, value_, o.value_); return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const {
        Rational r(*this);
        mpq_neg(r.value_, r.value_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.value_, b.value_) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return mpq_cmp(a.value_, b.value_) < 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    int sign() const { return mpq_sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const;
    Rational abs() const {
        Rational r(*this);
        mpq_abs(r.value_, r.value_);
        return r;
    }
    Rational pow(unsigned long exp) const;

    BigInteger numerator() const;
    BigInteger denominator() const;
    // Requires is_integer().
    BigInteger to_integer() const;

    // Canonical rendering: "p/q", with "/q" omitted when the denominator is 1.
    std::string to_string() const;

private:
    mpq_t value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

} // namespace exact
} // namespace galoislab

#endif
