#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace g2split {

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator (GMP's mpq canonical form).
class Rational {
 public:
  struct Domain {
    bool operator==(const Domain&) const = default;
    std::string name() const { return "QQ"; }
  };

  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q);

  /// Accepts "n", "n/d" and plain decimals such as "-2.25". Throws ParseError.
  static Rational parse(std::string_view text);

  static Rational from_int(const Domain&, long value) { return Rational(value); }
  static Rational from_rational(const Domain&, const Rational& value) { return value; }
  Domain domain() const { return {}; }

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& mpq() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  /// "num/den", or "num" for integers.
  std::string str() const;

  Rational inverse() const;
  Rational pow(long exponent) const;
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

/// Square-free check for the quadratic extension discriminant.
bool is_square_free(long d);

/// Exact square root of a non-negative rational if it is a perfect square.
bool rational_sqrt(const Rational& value, Rational& root);

}  // namespace g2split
