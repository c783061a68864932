#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace cfalg {

using Integer = mpz_class;

/// Arbitrary-precision rational scalar, always kept canonical: lowest
/// terms, denominator positive.  All arithmetic is exact.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}    // NOLINT: implicit by design
    Rational(long n) : v_(n) {}   // NOLINT: implicit by design
    Rational(const Integer& n) : v_(n) {}
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p" or "p/q" with optional sign; anything else raises
    /// ParseError, including q == 0.
    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return v_; }
    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Renders "p/q", or just "p" when the denominator is 1.
    std::string str() const;
    double to_double() const { return v_.get_d(); }

    /// Multiplicative inverse; raises BuildError on zero.
    Rational inverse() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

}  // namespace cfalg
