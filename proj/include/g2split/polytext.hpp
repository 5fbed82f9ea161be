#pragma once

#include "g2split/multipoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace g2split {

// Interchange format, two lines:
//   QQ: x,y,z
//   3:2,0,0;-1/2:0,1,0
// The first line names the coefficient domain and the variables, the second
// lists "coefficient:exponents" terms separated by ';' ("0" for the zero
// polynomial). Printing then parsing gives back the identical polynomial.

/// Header fields of a polynomial text.
struct PolyTextHeader {
  std::string domain;
  std::vector<std::string> vars;
};

PolyTextHeader parse_poly_header(std::string_view text);

/// Scalar parsers used by the text format, one per coefficient domain.
Rational parse_scalar(std::string_view text, const Rational::Domain&);
QuadExt parse_scalar(std::string_view text, const QuadExt::Domain& dom);
PrimeField parse_scalar(std::string_view text, const PrimeField::Domain& dom);
ExtFieldElement parse_scalar(std::string_view text, const ExtFieldElement::Domain& dom);

template <Field K>
std::string to_text(const MultiPoly<K>& p) {
  std::string out = p.domain().name() + ":";
  for (std::size_t i = 0; i < p.vars().size(); ++i) out += (i ? "," : " ") + p.vars()[i];
  out += "\n";
  if (p.is_zero()) return out + "0";
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) out += ";";
    first = false;
    out += c.str() + ":";
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
      if (i) out += ",";
      out += std::to_string(m.e[i]);
    }
  }
  return out;
}

/// Throws ParseError on malformed input and DomainMismatch when the header's
/// domain differs from `dom`.
template <Field K>
MultiPoly<K> from_text(std::string_view text, const typename K::Domain& dom) {
  PolyTextHeader header = parse_poly_header(text);
  if (header.domain != dom.name()) {
    throw DomainMismatch("polynomial text is over " + header.domain + ", expected " + dom.name());
  }
  std::size_t nl = text.find('\n');
  std::string_view body = text.substr(nl + 1);
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r' || body.back() == ' ')) body.remove_suffix(1);
  std::vector<typename MultiPoly<K>::Term> terms;
  if (body == "0" || body.empty()) return MultiPoly<K>(header.vars, dom);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find(';', pos);
    if (end == std::string_view::npos) end = body.size();
    std::string_view term = body.substr(pos, end - pos);
    std::size_t colon = term.rfind(':');
    if (colon == std::string_view::npos) throw ParseError("term without ':'", nl + 1 + pos);
    K c = parse_scalar(term.substr(0, colon), dom);
    Monomial m;
    std::size_t k = 0, q = colon + 1;
    while (q <= term.size()) {
      std::size_t comma = term.find(',', q);
      if (comma == std::string_view::npos) comma = term.size();
      std::string_view digits = term.substr(q, comma - q);
      if (digits.empty() || k >= header.vars.size()) throw ParseError("bad exponent vector", nl + 1 + pos + q);
      unsigned long e = 0;
      for (char ch : digits) {
        if (ch < '0' || ch > '9') throw ParseError("bad exponent", nl + 1 + pos + q);
        e = e * 10 + static_cast<unsigned long>(ch - '0');
        if (e > 0xFFFF) throw ParseError("exponent too large", nl + 1 + pos + q);
      }
      m.e[k++] = static_cast<std::uint16_t>(e);
      q = comma + 1;
    }
    if (k != header.vars.size()) throw ParseError("exponent vector length mismatch", nl + 1 + pos);
    terms.emplace_back(m, c);
    pos = end + 1;
  }
  return MultiPoly<K>::from_terms(header.vars, dom, std::move(terms));
}

/// Parses an infix expression over Q: integers, decimals, identifiers, + - * ^,
/// parentheses and division by a constant subexpression. Variables not listed in
/// `vars` are appended in order of first appearance.
QPoly parse_infix(std::string_view text, std::vector<std::string> vars = {});

/// Human-readable infix rendering, e.g. "x^2 - 1/2*y".
template <Field K>
std::string to_infix(const MultiPoly<K>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string coeff = c.str();
    bool negative = !coeff.empty() && coeff[0] == '-' && coeff.find_first_of("+-", 1) == std::string::npos;
    if (negative) coeff = coeff.substr(1);
    bool compound = coeff.find_first_of("+-", 1) != std::string::npos;
    if (compound) coeff = "(" + coeff + ")";
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
      if (!m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += p.vars()[i];
      if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
    }
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

}  // namespace g2split
