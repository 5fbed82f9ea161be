#include "g2split/quadext.hpp"

#include "g2split/error.hpp"

#include <cctype>

namespace g2split {

QuadExt::QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d == 1 || !is_square_free(d)) {
    throw InvalidArgument("quadratic extension needs a square-free d != 0, 1 (got " +
                          std::to_string(d) + ")");
  }
}

void QuadExt::check_same(const QuadExt& o) const {
  if (d_ != o.d_) {
    throw DomainMismatch("mixing QQ(sqrt(" + std::to_string(d_) + ")) with QQ(sqrt(" +
                         std::to_string(o.d_) + "))");
  }
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  check_same(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  check_same(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  check_same(o);
  Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw InvalidArgument("division by zero in quadratic extension");
  return QuadExt(a_ / n, -b_ / n, d_);
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  check_same(o);
  return *this *= o.inverse();
}

QuadExt QuadExt::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  QuadExt result(1, 0, d_);
  QuadExt base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  x.check_same(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string QuadExt::str() const {
  if (b_.is_zero()) return a_.str();
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  std::string coef;
  if (b_ == Rational(1)) {
    coef = root;
  } else if (b_ == Rational(-1)) {
    coef = "-" + root;
  } else {
    coef = b_.str() + "*" + root;
  }
  if (a_.is_zero()) return coef;
  return a_.str() + (coef[0] == '-' ? "" : "+") + coef;
}

bool QuadExt::looks_quadratic(std::string_view text) { return text.find("sqrt") != std::string_view::npos; }

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

QuadExt QuadExt::parse(std::string_view text, long default_d) {
  std::string t = strip(text);
  std::size_t at = t.find("sqrt(");
  if (at == std::string::npos) return QuadExt(Rational::parse(t), 0, default_d);

  std::size_t close = t.find(')', at);
  if (close == std::string::npos) throw ParseError("unterminated sqrt(", at);
  long d = 0;
  try {
    std::size_t used = 0;
    d = std::stol(t.substr(at + 5, close - at - 5), &used);
    if (used != close - at - 5) throw ParseError("bad sqrt argument", at + 5);
  } catch (const std::logic_error&) {
    throw ParseError("bad sqrt argument", at + 5);
  }
  if (close + 1 != t.size()) throw ParseError("trailing characters after sqrt(...)", close + 1);

  // Split "<a><sign><b>*sqrt(d)": the sign of the sqrt term is the last +/- that
  // is not the leading sign and not part of an exponent-free rational.
  std::string head = t.substr(0, at);
  Rational b(1);
  Rational a(0);
  if (!head.empty() && head.back() == '*') head.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  std::string coef = head;
  if (split != std::string::npos) {
    a = Rational::parse(head.substr(0, split));
    coef = head.substr(split);
  }
  if (coef.empty() || coef == "+") {
    b = Rational(1);
  } else if (coef == "-") {
    b = Rational(-1);
  } else {
    if (coef[0] == '+') coef.erase(0, 1);
    b = Rational::parse(coef);
  }
  return QuadExt(a, b, d);
}

}  // namespace g2split
