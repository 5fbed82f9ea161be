#pragma once

#include "g2split/multipoly.hpp"

#include <string>
#include <vector>

namespace g2split {

/// Determinant by Bareiss fraction-free elimination. Every intermediate entry
/// is a minor of the input, so the divisions are exact polynomial divisions.
template <Field K>
MultiPoly<K> bareiss_determinant(std::vector<std::vector<MultiPoly<K>>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw InvalidArgument("determinant of empty matrix");
  const auto vars = m[0][0].vars();
  const auto dom = m[0][0].domain();
  MultiPoly<K> previous = MultiPoly<K>::constant(vars, dom, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly<K>(vars, dom);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly<K> value = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = previous.is_constant() ? value.scaled(K::from_int(dom, 1) / previous.constant_term())
                                          : exact_divide(value, previous);
      }
      m[i][k] = MultiPoly<K>(vars, dom);
    }
    previous = m[k][k];
  }
  MultiPoly<K> det = m[n - 1][n - 1];
  return negate ? -det : det;
}

/// Sylvester matrix of f and g viewed as univariate polynomials in `var`.
template <Field K>
std::vector<std::vector<MultiPoly<K>>> sylvester_matrix(const MultiPoly<K>& f, const MultiPoly<K>& g,
                                                        const std::string& var) {
  auto cf = f.coefficients_in(var);
  auto cg = g.coefficients_in(var);
  const std::size_t m = cf.size() - 1, n = cg.size() - 1;
  const std::size_t size = m + n;
  const MultiPoly<K> zero(f.vars(), f.domain());
  std::vector<std::vector<MultiPoly<K>>> s(size, std::vector<MultiPoly<K>>(size, zero));
  // Row i of the f-block holds f's coefficients, highest first, shifted by i.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = cf[m - k];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = cg[n - k];
  }
  return s;
}

/// Res_var(f, g) as the Sylvester determinant. The result lives in the
/// remaining variables (a constant polynomial when f, g are univariate).
template <Field K>
MultiPoly<K> resultant(const MultiPoly<K>& f, const MultiPoly<K>& g, const std::string& var) {
  if (f.vars() != g.vars()) {
    auto vars = MultiPoly<K>::union_vars(f.vars(), g.vars());
    return resultant(f.with_vars(vars), g.with_vars(vars), var);
  }
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("resultant of the zero polynomial");
  if (f.degree_in(var) == 0 || g.degree_in(var) == 0) {
    throw InvalidArgument("resultant needs positive degree in '" + var + "' for both inputs");
  }
  return bareiss_determinant(sylvester_matrix(f, g, var));
}

/// D(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f), which vanishes iff f has a repeated root.
template <Field K>
MultiPoly<K> discriminant(const MultiPoly<K>& f, const std::string& var) {
  const unsigned n = f.is_zero() ? 0 : f.degree_in(var);
  if (n < 2) throw InvalidArgument("discriminant needs degree >= 2 in '" + var + "'");
  MultiPoly<K> res = resultant(f, f.derivative(var), var);
  MultiPoly<K> lead = f.coefficients_in(var).back();
  MultiPoly<K> d = lead.is_constant() ? res.scaled(K::from_int(f.domain(), 1) / lead.constant_term())
                                      : exact_divide(res, lead);
  return ((n * (n - 1) / 2) % 2) ? -d : d;
}

/// Scalar conveniences for univariate inputs.
template <Field K>
K resultant_value(const MultiPoly<K>& f, const MultiPoly<K>& g, const std::string& var) {
  return resultant(f, g, var).constant_term();
}

template <Field K>
K discriminant_value(const MultiPoly<K>& f, const std::string& var) {
  return discriminant(f, var).constant_term();
}

}  // namespace g2split
