#pragma once

#include "g2split/multipoly.hpp"
#include "g2split/resultant.hpp"

#include <array>
#include <vector>

namespace g2split {

/// y^2 = a6 X^6 + ... + a0, coefficients stored ascending (a[i] multiplies X^i).
template <Field K>
struct SexticForm {
  std::array<K, 7> a;
};

/// F = a3 X^3 + ... + a0 and G = b3 X^3 + ... + b0, stored ascending.
template <Field K>
struct CubicPair {
  std::array<K, 4> f;
  std::array<K, 4> g;
};

template <Field K>
struct IgusaInvariants {
  K J2, J4, J6, J10;
};

template <Field K>
struct AbsoluteInvariants {
  K i1, i2, i3;
  friend bool operator==(const AbsoluteInvariants&, const AbsoluteInvariants&) = default;
};

template <Field K>
struct CubicPairInvariants {
  K H, r1, r2, r3;
};

// Normalization constants relating H^3/Res and H^4/(D(F)D(G)) with the Sylvester
// resultant and classical discriminant to the (r1, r2) of the uv-parametrization.
// Pinned empirically; a test checks they are constant over many (u, v).
inline const Rational kLambdaR(-1, 729);
inline const Rational kLambdaD(mpz_class(1), mpz_class(1679616));

namespace detail {

// Binary form sum c[i] x^i y^(n-i) of degree n over K.
template <Field K>
struct BinaryForm {
  std::vector<K> c;
  unsigned degree() const { return static_cast<unsigned>(c.size() - 1); }
};

template <Field K>
BinaryForm<K> dx(const BinaryForm<K>& f) {
  const auto dom = f.c[0].domain();
  BinaryForm<K> r{std::vector<K>(f.degree(), K::from_int(dom, 0))};
  for (unsigned i = 1; i <= f.degree(); ++i) r.c[i - 1] = f.c[i] * K::from_int(dom, i);
  return r;
}

template <Field K>
BinaryForm<K> dy(const BinaryForm<K>& f) {
  const auto dom = f.c[0].domain();
  const unsigned n = f.degree();
  BinaryForm<K> r{std::vector<K>(n, K::from_int(dom, 0))};
  for (unsigned i = 0; i < n; ++i) r.c[i] = f.c[i] * K::from_int(dom, n - i);
  return r;
}

template <Field K>
BinaryForm<K> partial(BinaryForm<K> f, unsigned nx, unsigned ny) {
  for (unsigned k = 0; k < nx; ++k) f = dx(f);
  for (unsigned k = 0; k < ny; ++k) f = dy(f);
  return f;
}

template <Field K>
BinaryForm<K> times(const BinaryForm<K>& a, const BinaryForm<K>& b) {
  const auto dom = a.c[0].domain();
  BinaryForm<K> r{std::vector<K>(a.c.size() + b.c.size() - 1, K::from_int(dom, 0))};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
  }
  return r;
}

inline long factorial(unsigned n) {
  long r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= static_cast<long>(k);
  return r;
}

inline long binomial(unsigned n, unsigned k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// Transvectant (f, g)_k with the normalization (m-k)!(n-k)!/(m!n!).
template <Field K>
BinaryForm<K> transvectant(const BinaryForm<K>& f, const BinaryForm<K>& g, unsigned k) {
  const auto dom = f.c[0].domain();
  const unsigned m = f.degree(), n = g.degree();
  BinaryForm<K> sum{std::vector<K>(m + n - 2 * k + 1, K::from_int(dom, 0))};
  for (unsigned i = 0; i <= k; ++i) {
    BinaryForm<K> t = times(partial(f, k - i, i), partial(g, i, k - i));
    K w = K::from_int(dom, (i % 2 ? -1 : 1) * binomial(k, i));
    for (std::size_t j = 0; j < t.c.size(); ++j) sum.c[j] = sum.c[j] + w * t.c[j];
  }
  K scale = K::from_rational(dom, Rational(mpz_class(factorial(m - k) * factorial(n - k)),
                                           mpz_class(factorial(m) * factorial(n))));
  for (auto& c : sum.c) c = c * scale;
  return sum;
}

template <Field K>
K scalar_of(const BinaryForm<K>& f) {
  return f.c.at(0);
}

}  // namespace detail

template <Field K>
bool is_zero_sextic(const SexticForm<K>& f) {
  for (const auto& c : f.a) {
    if (!c.is_zero()) return false;
  }
  return true;
}

/// Igusa-Clebsch invariants (J2, J4, J6, J10) of the binary sextic, built from
/// Clebsch transvectants. J10 equals the discriminant of the degree-6 form.
/// Over GF(p) this needs p > 7 (factorials of 6 are inverted).
template <Field K>
IgusaInvariants<K> igusa_from_sextic(const SexticForm<K>& f) {
  using detail::transvectant;
  if (is_zero_sextic(f)) throw InvalidArgument("zero sextic");
  if (f.a[6].is_zero() && f.a[5].is_zero()) throw InvalidArgument("sextic must have degree 5 or 6");
  detail::BinaryForm<K> form{std::vector<K>(f.a.begin(), f.a.end())};
  auto i = transvectant(form, form, 4);
  auto delta = transvectant(i, i, 2);
  auto y1 = transvectant(form, i, 4);
  auto y2 = transvectant(i, y1, 2);
  auto y3 = transvectant(i, y2, 2);
  K A = detail::scalar_of(transvectant(form, form, 6));
  K B = detail::scalar_of(transvectant(i, i, 4));
  K C = detail::scalar_of(transvectant(i, delta, 4));
  K D = detail::scalar_of(transvectant(y3, y1, 2));
  const auto dom = A.domain();
  auto n = [&](long v) { return K::from_int(dom, v); };
  K A2 = A * A, A3 = A2 * A;
  IgusaInvariants<K> J{
      n(-120) * A,
      n(-720) * A2 + n(6750) * B,
      n(8640) * A3 - n(108000) * A * B + n(202500) * C,
      n(-62208) * A3 * A2 + n(972000) * A3 * B + n(1620000) * A2 * C - n(3037500) * A * B * B -
          n(6075000) * B * C - n(4556250) * D,
  };
  return J;
}

/// (i1, i2, i3) = (144 J4/J2^2, -1728 (J2 J4 - 3 J6)/J2^3, 486 J10/J2^5).
template <Field K>
AbsoluteInvariants<K> absolute_from_igusa(const IgusaInvariants<K>& J) {
  if (J.J2.is_zero()) throw Undefined("J2Vanishes", "absolute invariants need J2 != 0");
  const auto dom = J.J2.domain();
  K J2sq = J.J2 * J.J2;
  K J2cu = J2sq * J.J2;
  return {
      K::from_int(dom, 144) * J.J4 / J2sq,
      K::from_int(dom, -1728) * (J.J2 * J.J4 - K::from_int(dom, 3) * J.J6) / J2cu,
      K::from_int(dom, 486) * J.J10 / (J2cu * J2sq),
  };
}

template <Field K>
AbsoluteInvariants<K> absolute_invariants(const SexticForm<K>& f) {
  return absolute_from_igusa(igusa_from_sextic(f));
}

/// Univariate polynomial in X from ascending coefficients.
template <Field K>
MultiPoly<K> univariate(const std::vector<K>& ascending, const std::string& var = "X") {
  const auto dom = ascending.at(0).domain();
  std::vector<typename MultiPoly<K>::Term> terms;
  for (std::size_t i = 0; i < ascending.size(); ++i) {
    Monomial m;
    m.e[0] = static_cast<std::uint16_t>(i);
    terms.emplace_back(m, ascending[i]);
  }
  return MultiPoly<K>::from_terms({var}, dom, std::move(terms));
}

/// Discriminant of the sextic as a polynomial of its actual degree.
template <Field K>
K sextic_discriminant(const SexticForm<K>& f) {
  return discriminant_value(univariate(std::vector<K>(f.a.begin(), f.a.end())), "X");
}

/// The sextic (gamma X + delta)^6 f((alpha X + beta)/(gamma X + delta)).
template <Field K>
SexticForm<K> transform_sextic(const SexticForm<K>& f, const K& alpha, const K& beta, const K& gamma, const K& delta) {
  const auto dom = alpha.domain();
  using detail::BinaryForm;
  BinaryForm<K> num{{beta, alpha}};
  BinaryForm<K> den{{delta, gamma}};
  BinaryForm<K> total{std::vector<K>(7, K::from_int(dom, 0))};
  for (unsigned i = 0; i <= 6; ++i) {
    BinaryForm<K> t{{K::from_int(dom, 1)}};
    for (unsigned k = 0; k < i; ++k) t = detail::times(t, num);
    for (unsigned k = i; k < 6; ++k) t = detail::times(t, den);
    for (unsigned j = 0; j <= 6; ++j) total.c[j] = total.c[j] + f.a[i] * t.c[j];
  }
  SexticForm<K> out;
  for (unsigned j = 0; j <= 6; ++j) out.a[j] = total.c[j];
  return out;
}

/// H(F,G) = a3 b0 - a2 b1/3 + a1 b2/3 - a0 b3.
template <Field K>
K pair_H(const CubicPair<K>& p) {
  const auto dom = p.f[0].domain();
  K third = K::from_rational(dom, Rational(mpz_class(1), mpz_class(3)));
  return p.f[3] * p.g[0] - third * p.f[2] * p.g[1] + third * p.f[1] * p.g[2] - p.f[0] * p.g[3];
}

template <Field K>
SexticForm<K> pair_product(const CubicPair<K>& p) {
  auto prod = detail::times(detail::BinaryForm<K>{{p.f.begin(), p.f.end()}},
                            detail::BinaryForm<K>{{p.g.begin(), p.g.end()}});
  SexticForm<K> s;
  for (unsigned j = 0; j <= 6; ++j) s.a[j] = prod.c[j];
  return s;
}

/// (r1, r2) = (H^3/(lambda_R Res(F,G)), H^4/(lambda_D D(F) D(G))).
template <Field K>
std::pair<K, K> pair_r1_r2(const CubicPair<K>& p) {
  const auto dom = p.f[0].domain();
  MultiPoly<K> F = univariate(std::vector<K>(p.f.begin(), p.f.end()));
  MultiPoly<K> G = univariate(std::vector<K>(p.g.begin(), p.g.end()));
  if (F.degree_in("X") < 2 || G.degree_in("X") < 2) {
    throw Undefined("DiscriminantVanishes", "both cubics need degree >= 2");
  }
  K res = resultant_value(F, G, "X");
  if (res.is_zero()) throw Undefined("ResultantVanishes", "F and G share a root");
  K dF = discriminant_value(F, "X");
  K dG = discriminant_value(G, "X");
  if (dF.is_zero()) throw Undefined("DiscriminantVanishes", "D(F) = 0");
  if (dG.is_zero()) throw Undefined("DiscriminantVanishes", "D(G) = 0");
  K h = pair_H(p);
  K h2 = h * h;
  return {h2 * h / (K::from_rational(dom, kLambdaR) * res), h2 * h2 / (K::from_rational(dom, kLambdaD) * dF * dG)};
}

/// r3 = H^2 / J2(F G).
template <Field K>
K pair_r3(const CubicPair<K>& p) {
  K J2 = igusa_from_sextic(pair_product(p)).J2;
  if (J2.is_zero()) throw Undefined("J2Vanishes", "J2 of the product sextic is zero");
  K h = pair_H(p);
  return h * h / J2;
}

template <Field K>
CubicPairInvariants<K> pair_invariants(const CubicPair<K>& p) {
  auto [r1, r2] = pair_r1_r2(p);
  return {pair_H(p), r1, r2, pair_r3(p)};
}

/// The curve y^2 = (4v^2 X^3 + v^2 X^2 + 2v X + 1)(v^2 X^3 + uv X^2 + v X + 1).
template <Field K>
std::pair<SexticForm<K>, CubicPair<K>> curve_from_uv(const K& u, const K& v) {
  if (v.is_zero()) throw Undefined("DegenerateParameters", "v = 0");
  const auto dom = u.domain();
  K one = K::from_int(dom, 1);
  K v2 = v * v;
  CubicPair<K> pair{{one, K::from_int(dom, 2) * v, v2, K::from_int(dom, 4) * v2}, {one, v, u * v, v2}};
  return {pair_product(pair), pair};
}

}  // namespace g2split
