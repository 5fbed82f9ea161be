#include "g2split/polytext.hpp"

#include <cctype>

namespace g2split {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Recursive-descent parser for infix polynomials over Q.
class InfixParser {
 public:
  InfixParser(std::string_view text, std::vector<std::string> vars) : text_(text), vars_(std::move(vars)) {
    discover_vars();
  }

  QPoly parse() {
    QPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void discover_vars() {
    for (std::size_t i = 0; i < text_.size();) {
      if (is_ident_start(text_[i])) {
        std::size_t j = i;
        while (j < text_.size() && is_ident_char(text_[j])) ++j;
        std::string name(text_.substr(i, j - i));
        if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) vars_.push_back(name);
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(text_[i]))) {
        while (i < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[i])) || text_[i] == '.')) ++i;
      } else {
        ++i;
      }
    }
    if (vars_.size() > kMaxVars) throw ParseError("too many variables", 0);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  QPoly expr() {
    skip_space();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    QPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  QPoly term() {
    QPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        QPoly d = factor();
        if (!d.is_constant() || d.is_zero()) throw ParseError("division by a non-constant or zero expression", at);
        acc = acc.scaled(d.constant_term().inverse());
      } else {
        return acc;
      }
    }
  }

  QPoly factor() {
    skip_space();
    if (accept('-')) return -factor();
    QPoly base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
        if (e > 0xFFFF) throw ParseError("exponent too large", start);
      }
      if (pos_ == start) throw ParseError("expected a non-negative integer exponent", start);
      base = base.pow(e);
    }
    return base;
  }

  QPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      QPoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      return QPoly::constant(vars_, Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      return QPoly::variable(vars_, {}, std::string(text_.substr(start, pos_ - start)));
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyTextHeader parse_poly_header(std::string_view text) {
  std::size_t nl = text.find('\n');
  if (nl == std::string_view::npos) throw ParseError("missing header line", text.size());
  std::string_view line = text.substr(0, nl);
  std::size_t colon = line.find(':');
  if (colon == std::string_view::npos) throw ParseError("header needs 'DOMAIN: vars'", 0);
  PolyTextHeader h;
  h.domain = std::string(trim(line.substr(0, colon)));
  std::string_view rest = trim(line.substr(colon + 1));
  std::size_t pos = 0;
  while (!rest.empty() && pos <= rest.size()) {
    std::size_t comma = rest.find(',', pos);
    if (comma == std::string_view::npos) comma = rest.size();
    std::string_view name = trim(rest.substr(pos, comma - pos));
    if (name.empty() || !is_ident_start(name[0])) throw ParseError("bad variable name", colon + 1 + pos);
    h.vars.emplace_back(name);
    pos = comma + 1;
  }
  if (h.vars.size() > kMaxVars) throw ParseError("too many variables", colon);
  return h;
}

Rational parse_scalar(std::string_view text, const Rational::Domain&) { return Rational::parse(text); }

QuadExt parse_scalar(std::string_view text, const QuadExt::Domain& dom) {
  QuadExt q = QuadExt::parse(text, dom.d);
  if (q.d() != dom.d) throw DomainMismatch("coefficient '" + std::string(text) + "' is outside " + dom.name());
  return q;
}

PrimeField parse_scalar(std::string_view text, const PrimeField::Domain& dom) {
  return PrimeField::from_rational(dom, Rational::parse(text));
}

ExtFieldElement parse_scalar(std::string_view text, const ExtFieldElement::Domain& dom) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    return ExtFieldElement::from_rational(dom, Rational::parse(text));
  }
  std::vector<std::uint64_t> coeffs;
  std::string_view inner = text.substr(1, text.size() - 2);
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    std::size_t comma = inner.find(',', pos);
    if (comma == std::string_view::npos) comma = inner.size();
    Rational r = Rational::parse(inner.substr(pos, comma - pos));
    if (!r.is_integer() || r.sign() < 0) throw ParseError("extension field digits must be non-negative integers", pos);
    coeffs.push_back(r.num().get_ui());
    pos = comma + 1;
  }
  return ExtFieldElement::from_coefficients(dom, coeffs);
}

QPoly parse_infix(std::string_view text, std::vector<std::string> vars) {
  return InfixParser(text, std::move(vars)).parse();
}

}  // namespace g2split
