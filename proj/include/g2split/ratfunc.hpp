#pragma once

#include "g2split/multipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace g2split {

/// Quotient num/den of polynomials. Never reduced by a gcd: equality is decided
/// by cross-multiplication.
template <Field K>
class RationalFunction {
 public:
  using Poly = MultiPoly<K>;

  RationalFunction() = default;
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
    if (num_.vars() != den_.vars()) {
      auto vars = Poly::union_vars(num_.vars(), den_.vars());
      num_ = num_.with_vars(vars);
      den_ = den_.with_vars(vars);
    }
  }
  explicit RationalFunction(Poly num)
      : num_(std::move(num)), den_(Poly::constant(num_.vars(), num_.domain(), 1)) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const std::vector<std::string>& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) throw InvalidArgument("division by zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFunction operator-() const { return {-num_, den_}; }

  RationalFunction pow(unsigned long exponent) const { return {num_.pow(exponent), den_.pow(exponent)}; }

  /// Quotient rule, without simplification.
  RationalFunction derivative(const std::string& name) const {
    return {num_.derivative(name) * den_ - num_ * den_.derivative(name), den_ * den_};
  }

  /// Cross-multiplied numerator num1*den2 - num2*den1 (zero iff equal).
  friend Poly cross_difference(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ - b.num_ * a.den_;
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return cross_difference(a, b).is_zero();
  }

  /// Throws DenominatorVanishes when the denominator is zero at the point.
  K evaluate(const std::vector<K>& point) const {
    K d = den_.evaluate(point);
    if (d.is_zero()) throw DenominatorVanishes("denominator");
    return num_.evaluate(point) / d;
  }

  template <Field L, class Conv>
  RationalFunction<L> map_coefficients(const typename L::Domain& dom, Conv conv) const {
    return {num_.template map_coefficients<L>(dom, conv), den_.template map_coefficients<L>(dom, conv)};
  }

 private:
  Poly num_;
  Poly den_;
};

using QRatFunc = RationalFunction<Rational>;

/// Substitutes rational functions for the variables of p. With p of degree d_i in
/// x_i and x_i -> n_i/e_i, returns (sum c * prod n_i^a_i e_i^(d_i - a_i)) / prod e_i^d_i.
template <Field K>
RationalFunction<K> substitute(const MultiPoly<K>& p, const std::map<std::string, RationalFunction<K>>& bindings) {
  std::vector<std::string> out_vars;
  for (const auto& v : p.vars()) {
    auto it = bindings.find(v);
    if (it == bindings.end()) throw InvalidArgument("variable '" + v + "' is not bound in substitution");
    out_vars = MultiPoly<K>::union_vars(out_vars, it->second.vars());
  }
  const auto& dom = p.domain();
  const std::size_t n = p.vars().size();
  std::vector<unsigned> deg(n);
  std::vector<std::vector<MultiPoly<K>>> num_pow(n), den_pow(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& b = bindings.at(p.vars()[i]);
    deg[i] = p.degree_in(p.vars()[i]);
    MultiPoly<K> one = MultiPoly<K>::constant(out_vars, dom, 1);
    num_pow[i].push_back(one);
    den_pow[i].push_back(one);
    MultiPoly<K> bn = b.num().with_vars(out_vars), bd = b.den().with_vars(out_vars);
    for (unsigned k = 1; k <= deg[i]; ++k) {
      num_pow[i].push_back(num_pow[i].back() * bn);
      den_pow[i].push_back(den_pow[i].back() * bd);
    }
  }
  MultiPoly<K> num(out_vars, dom);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly<K> term = MultiPoly<K>::constant(out_vars, c);
    for (std::size_t i = 0; i < n; ++i) {
      unsigned a = m.e[i];
      if (a) term = term * num_pow[i][a];
      if (deg[i] - a) term = term * den_pow[i][deg[i] - a];
    }
    num = num + term;
  }
  MultiPoly<K> den = MultiPoly<K>::constant(out_vars, dom, 1);
  for (std::size_t i = 0; i < n; ++i) den = den * den_pow[i][deg[i]];
  return {num, den};
}

}  // namespace g2split
