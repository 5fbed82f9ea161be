#pragma once

#include "g2split/error.hpp"
#include "g2split/scalar.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace g2split {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector with fixed capacity; unused slots stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  unsigned degree() const { return std::accumulate(e.begin(), e.end(), 0u); }
  bool operator==(const Monomial&) const = default;

  /// Graded-lex: total degree first, then lexicographic on exponents.
  friend bool graded_lex_less(const Monomial& a, const Monomial& b) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e[i] > o.e[i]) return false;
    }
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned{e[i]} + o.e[i];
      if (s > 0xFFFF) throw InvalidArgument("exponent overflow");
      r.e[i] = static_cast<std::uint16_t>(s);
    }
    return r;
  }
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
    return r;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : m.e) h = (h ^ v) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

/// Sparse multivariate polynomial over an exact field K. Terms are kept sorted in
/// descending graded-lex order with no zero coefficients, so equality of two
/// polynomials over the same variable list is term-vector equality.
template <Field K>
class MultiPoly {
 public:
  using Domain = typename K::Domain;
  using Term = std::pair<Monomial, K>;

  MultiPoly() = default;
  MultiPoly(std::vector<std::string> vars, Domain domain) : vars_(std::move(vars)), domain_(std::move(domain)) {
    if (vars_.size() > kMaxVars) throw InvalidArgument("too many variables");
  }

  static MultiPoly constant(std::vector<std::string> vars, const K& c) {
    MultiPoly p(std::move(vars), c.domain());
    if (!c.is_zero()) p.terms_.emplace_back(Monomial{}, c);
    return p;
  }
  static MultiPoly constant(std::vector<std::string> vars, Domain dom, long c) {
    return constant(std::move(vars), K::from_int(dom, c));
  }
  static MultiPoly variable(std::vector<std::string> vars, Domain dom, const std::string& name) {
    MultiPoly p(std::move(vars), dom);
    Monomial m;
    m.e[p.index_of(name)] = 1;
    p.terms_.emplace_back(m, K::from_int(dom, 1));
    return p;
  }
  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static MultiPoly from_terms(std::vector<std::string> vars, Domain dom, std::vector<Term> terms) {
    MultiPoly p(std::move(vars), std::move(dom));
    std::unordered_map<Monomial, K, MonomialHash> acc;
    for (auto& [m, c] : terms) {
      p.check_domain(c.domain());
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(m, std::move(c));
      } else {
        it->second = it->second + c;
      }
    }
    p.assign(std::move(acc));
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Domain& domain() const { return domain_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0); }
  K constant_term() const {
    if (!terms_.empty() && terms_.back().first.degree() == 0) return terms_.back().second;
    return K::from_int(domain_, 0);
  }
  const Term& leading_term() const {
    if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
    return terms_.front();
  }

  bool has_var(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
  }
  std::size_t index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }
  unsigned degree_in(const std::string& name) const {
    std::size_t i = index_of(name);
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.first.e[i]);
    return d;
  }

  /// Coefficient of an exact exponent vector (zero when absent).
  K coefficient(const std::vector<unsigned>& exponents) const {
    Monomial m;
    for (std::size_t i = 0; i < exponents.size(); ++i) m.e[i] = static_cast<std::uint16_t>(exponents[i]);
    for (const auto& t : terms_) {
      if (t.first == m) return t.second;
    }
    return K::from_int(domain_, 0);
  }

  /// Re-expresses the polynomial over a superset (or permutation) of its variables.
  MultiPoly with_vars(const std::vector<std::string>& new_vars) const {
    if (new_vars == vars_) return *this;
    std::vector<std::size_t> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
      if (it == new_vars.end()) {
        for (const auto& t : terms_) {
          if (t.first.e[i] != 0) throw InvalidArgument("variable '" + vars_[i] + "' dropped while realigning");
        }
        map[i] = kMaxVars;
        continue;
      }
      map[i] = static_cast<std::size_t>(it - new_vars.begin());
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Monomial n;
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (map[i] < kMaxVars) n.e[map[i]] = m.e[i];
      }
      out.emplace_back(n, c);
    }
    return from_terms(new_vars, domain_, std::move(out));
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, true); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) {
      auto vars = union_vars(a.vars_, b.vars_);
      return a.with_vars(vars) * b.with_vars(vars);
    }
    a.check_domain(b.domain_);
    MultiPoly r(a.vars_, a.domain_);
    if (a.is_zero() || b.is_zero()) return r;
    std::unordered_map<Monomial, K, MonomialHash> acc;
    acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), std::size_t{1} << 20));
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma * mb;
        auto it = acc.find(m);
        if (it == acc.end()) {
          acc.emplace(m, ca * cb);
        } else {
          it->second = it->second + ca * cb;
        }
      }
    }
    r.assign(std::move(acc));
    return r;
  }

  MultiPoly scaled(const K& c) const {
    check_domain(c.domain());
    MultiPoly r(vars_, domain_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, v] : terms_) r.terms_.emplace_back(m, v * c);
    return r;
  }

  MultiPoly pow(unsigned long exponent) const {
    MultiPoly result = constant(vars_, domain_, 1);
    MultiPoly base = *this;
    while (exponent > 0) {
      if (exponent & 1) result = result * base;
      exponent >>= 1;
      if (exponent) base = base * base;
    }
    return result;
  }

  MultiPoly derivative(const std::string& name) const {
    std::size_t i = index_of(name);
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
      if (m.e[i] == 0) continue;
      Monomial n = m;
      n.e[i] = static_cast<std::uint16_t>(m.e[i] - 1);
      out.emplace_back(n, c * K::from_int(domain_, m.e[i]));
    }
    return from_terms(vars_, domain_, std::move(out));
  }

  /// Evaluates at a point given in variable order.
  K evaluate(const std::vector<K>& point) const {
    if (point.size() != vars_.size()) {
      throw InvalidArgument("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                            std::to_string(vars_.size()));
    }
    for (const auto& v : point) check_domain(v.domain());
    return evaluate_mapped<K>(point, [](const K& c) { return c; }, K::from_int(domain_, 0));
  }

  K evaluate(const std::map<std::string, K>& point) const {
    std::vector<K> ordered;
    ordered.reserve(vars_.size());
    for (const auto& v : vars_) {
      auto it = point.find(v);
      if (it == point.end()) throw InvalidArgument("variable '" + v + "' is not bound");
      ordered.push_back(it->second);
    }
    return evaluate(ordered);
  }

  /// Generic evaluation into another arithmetic type T (a field element of a
  /// different domain, or a multiprecision float), mapping coefficients with `conv`.
  template <class T, class Conv>
  T evaluate_mapped(const std::vector<T>& point, Conv conv, T zero) const {
    std::vector<std::vector<T>> powers(vars_.size());
    std::vector<unsigned> max_deg(vars_.size(), 0);
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < vars_.size(); ++i) max_deg[i] = std::max<unsigned>(max_deg[i], t.first.e[i]);
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      powers[i].reserve(max_deg[i] + 1);
      powers[i].push_back(point[i]);  // slot 0 is never read
      if (max_deg[i] >= 1) powers[i].push_back(point[i]);
      for (unsigned d = 2; d <= max_deg[i]; ++d) powers[i].push_back(powers[i][d - 1] * point[i]);
    }
    T sum = zero;
    for (const auto& [m, c] : terms_) {
      T term = conv(c);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (m.e[i]) term = term * powers[i][m.e[i]];
      }
      sum = sum + term;
    }
    return sum;
  }

  /// Maps every coefficient into another field (e.g. reduction mod p).
  template <Field L, class Conv>
  MultiPoly<L> map_coefficients(const typename L::Domain& dom, Conv conv) const {
    std::vector<typename MultiPoly<L>::Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.emplace_back(m, conv(c));
    return MultiPoly<L>::from_terms(vars_, dom, std::move(out));
  }

  /// Coefficients with respect to one variable: result[k] multiplies name^k.
  std::vector<MultiPoly> coefficients_in(const std::string& name) const {
    std::size_t i = index_of(name);
    std::vector<std::vector<Term>> buckets(degree_in(name) + 1);
    for (const auto& [m, c] : terms_) {
      Monomial n = m;
      n.e[i] = 0;
      buckets[m.e[i]].emplace_back(n, c);
    }
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(vars_, domain_, std::move(b)));
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.domain_ == b.domain_)) return false;
    if (a.vars_ != b.vars_) {
      auto vars = union_vars(a.vars_, b.vars_);
      return a.with_vars(vars).terms_ == b.with_vars(vars).terms_;
    }
    return a.terms_ == b.terms_;
  }

  static std::vector<std::string> union_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b) {
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    if (out.size() > kMaxVars) throw InvalidArgument("too many variables after alignment");
    return out;
  }

  void check_domain(const Domain& other) const {
    if (!(domain_ == other)) throw DomainMismatch("mixing " + domain_.name() + " with " + other.name());
  }

 private:
  static MultiPoly combine(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    if (a.vars_ != b.vars_) {
      auto vars = union_vars(a.vars_, b.vars_);
      return combine(a.with_vars(vars), b.with_vars(vars), subtract);
    }
    a.check_domain(b.domain_);
    MultiPoly r(a.vars_, a.domain_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    // Merge of two descending sequences.
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && graded_lex_less(b.terms_[j].first, a.terms_[i].first))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || graded_lex_less(a.terms_[i].first, b.terms_[j].first)) {
        const auto& [m, c] = b.terms_[j++];
        r.terms_.emplace_back(m, subtract ? -c : c);
      } else {
        K c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  void assign(std::unordered_map<Monomial, K, MonomialHash>&& acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!c.is_zero()) terms_.emplace_back(m, std::move(c));
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return graded_lex_less(y.first, x.first); });
  }

  std::vector<std::string> vars_;
  Domain domain_{};
  std::vector<Term> terms_;
};

using QPoly = MultiPoly<Rational>;

/// Coefficient-wise reduction of a rational polynomial into GF(p).
/// Throws DenominatorNotUnit when p divides a coefficient denominator.
inline MultiPoly<PrimeField> reduce_mod_p(const QPoly& p, std::uint64_t prime) {
  PrimeField::Domain dom{prime};
  return p.map_coefficients<PrimeField>(dom, [&](const Rational& c) { return PrimeField::from_rational(dom, c); });
}

/// Embeds a rational polynomial into another field by mapping coefficients.
template <Field K>
MultiPoly<K> embed(const QPoly& p, const typename K::Domain& dom) {
  return p.template map_coefficients<K>(dom, [&](const Rational& c) { return K::from_rational(dom, c); });
}

/// Evaluates a rational polynomial at a point of any field K.
template <Field K>
K evaluate_in(const QPoly& p, const std::vector<K>& point, const typename K::Domain& dom) {
  if (point.size() != p.vars().size()) throw InvalidArgument("evaluation point dimension mismatch");
  if (point.empty()) return K::from_rational(dom, p.constant_term());
  return p.evaluate_mapped<K>(point, [&](const Rational& c) { return K::from_rational(dom, c); },
                              K::from_int(dom, 0));
}

/// Exact quotient a / b. Throws InvalidArgument if b does not divide a.
template <Field K>
MultiPoly<K> exact_divide(const MultiPoly<K>& a, const MultiPoly<K>& b) {
  if (b.is_zero()) throw InvalidArgument("exact division by zero polynomial");
  if (a.vars() != b.vars()) {
    auto vars = MultiPoly<K>::union_vars(a.vars(), b.vars());
    return exact_divide(a.with_vars(vars), b.with_vars(vars));
  }
  MultiPoly<K> quotient(a.vars(), a.domain());
  MultiPoly<K> rest = a;
  const auto& [lm, lc] = b.leading_term();
  while (!rest.is_zero()) {
    const auto& [rm, rc] = rest.leading_term();
    if (!lm.divides(rm)) throw InvalidArgument("polynomial division is not exact");
    MultiPoly<K> t = MultiPoly<K>::from_terms(a.vars(), a.domain(), {{rm / lm, rc / lc}});
    quotient = quotient + t;
    rest = rest - t * b;
  }
  return quotient;
}

}  // namespace g2split
