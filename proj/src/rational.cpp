#include "g2split/rational.hpp"

#include "g2split/error.hpp"

#include <cctype>

namespace g2split {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

namespace {

// Parses an optionally signed run of digits starting at `pos`.
mpz_class parse_integer(std::string_view text, std::size_t& pos, bool allow_sign) {
  std::size_t start = pos;
  std::string digits;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '-') digits.push_back('-');
    ++pos;
  }
  std::size_t first_digit = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    digits.push_back(text[pos]);
    ++pos;
  }
  if (pos == first_digit) throw ParseError("expected digits in rational '" + std::string(text) + "'", start);
  return mpz_class(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view t = text.substr(b, e - b);
  if (t.empty()) throw ParseError("empty rational", b);

  std::size_t pos = 0;
  bool negative = !t.empty() && t[0] == '-';
  mpz_class whole = parse_integer(t, pos, true);
  if (pos == t.size()) return Rational(mpq_class(whole));

  if (t[pos] == '/') {
    ++pos;
    mpz_class den = parse_integer(t, pos, false);
    if (pos != t.size()) throw ParseError("trailing characters in rational", b + pos);
    if (den == 0) throw ParseError("zero denominator in rational '" + std::string(t) + "'", b + pos - 1);
    return Rational(whole, den);
  }
  if (t[pos] == '.') {
    ++pos;
    std::size_t frac_start = pos;
    mpz_class frac = pos < t.size() ? parse_integer(t, pos, false) : mpz_class(0);
    if (pos != t.size()) throw ParseError("trailing characters in decimal", b + pos);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, pos - frac_start);
    mpz_class num = ::abs(whole) * scale + frac;
    if (negative) num = -num;
    return Rational(num, scale);
  }
  throw ParseError("unexpected character '" + std::string(1, t[pos]) + "' in rational", b + pos);
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero rational");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero rational");
  q_ /= o.q_;
  return *this;
}

bool is_square_free(long d) {
  if (d == 0) return false;
  unsigned long n = d < 0 ? static_cast<unsigned long>(-d) : static_cast<unsigned long>(d);
  for (unsigned long f = 2; f * f <= n; ++f) {
    if (n % (f * f) == 0) return false;
  }
  return true;
}

bool rational_sqrt(const Rational& value, Rational& root) {
  if (value.sign() < 0) return false;
  mpz_class n = value.num(), d = value.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  return true;
}

}  // namespace g2split
