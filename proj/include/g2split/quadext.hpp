#pragma once

#include "g2split/rational.hpp"

#include <string>
#include <string_view>

namespace g2split {

/// Element a + b*sqrt(d) of the quadratic field Q(sqrt(d)), d square-free, d != 0, 1.
/// Values carrying different d are never mixed; doing so throws DomainMismatch.
class QuadExt {
 public:
  struct Domain {
    long d = -1;
    bool operator==(const Domain&) const = default;
    std::string name() const { return "QQ(sqrt(" + std::to_string(d) + "))"; }
  };

  QuadExt() = default;
  QuadExt(Rational a, Rational b, long d);

  static QuadExt from_int(const Domain& dom, long value) { return QuadExt(Rational(value), 0, dom.d); }
  static QuadExt from_rational(const Domain& dom, const Rational& value) {
    return QuadExt(value, 0, dom.d);
  }
  /// The generator sqrt(d).
  static QuadExt sqrt_of(long d) { return QuadExt(0, 1, d); }

  /// Parses "a", "a+b*sqrt(d)", "a-b*sqrt(d)", "b*sqrt(d)", "sqrt(d)". A bare
  /// rational yields b = 0 with the given default d.
  static QuadExt parse(std::string_view text, long default_d = -1);
  /// True when `text` mentions sqrt(...).
  static bool looks_quadratic(std::string_view text);

  Domain domain() const { return {d_}; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
  QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }
  QuadExt inverse() const;
  QuadExt pow(long exponent) const;

  /// Canonical text: "a" when b == 0, else "a+b*sqrt(d)" / "a-b*sqrt(d)" (a omitted when 0).
  std::string str() const;

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y);

 private:
  void check_same(const QuadExt& o) const;

  Rational a_;
  Rational b_;
  long d_ = -1;
};

}  // namespace g2split
