#pragma once

#include "g2split/rational.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace g2split {

bool is_prime(std::uint64_t n);

/// Element of the prime field GF(p), p < 2^31.
class PrimeField {
 public:
  struct Domain {
    std::uint64_t p = 2;
    bool operator==(const Domain&) const = default;
    std::string name() const { return "GF(" + std::to_string(p) + ")"; }
  };

  PrimeField() = default;
  /// Throws InvalidArgument when p is not a prime below 2^31.
  PrimeField(std::int64_t value, std::uint64_t p);

  static PrimeField from_int(const Domain& dom, long value) { return PrimeField(value, dom.p); }
  /// Throws DenominatorNotUnit when p divides the denominator.
  static PrimeField from_rational(const Domain& dom, const Rational& value);
  static PrimeField random(const Domain& dom, std::mt19937_64& rng);

  Domain domain() const { return {p_}; }
  std::uint64_t value() const { return v_; }
  std::uint64_t prime() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  PrimeField inverse() const;
  PrimeField pow(std::uint64_t exponent) const;
  std::string str() const { return std::to_string(v_); }

  PrimeField operator-() const { return PrimeField::raw(v_ == 0 ? 0 : p_ - v_, p_); }
  PrimeField& operator+=(const PrimeField& o);
  PrimeField& operator-=(const PrimeField& o);
  PrimeField& operator*=(const PrimeField& o);
  PrimeField& operator/=(const PrimeField& o) { return *this *= o.inverse(); }

  friend PrimeField operator+(PrimeField x, const PrimeField& y) { return x += y; }
  friend PrimeField operator-(PrimeField x, const PrimeField& y) { return x -= y; }
  friend PrimeField operator*(PrimeField x, const PrimeField& y) { return x *= y; }
  friend PrimeField operator/(PrimeField x, const PrimeField& y) { return x /= y; }
  friend bool operator==(const PrimeField& x, const PrimeField& y) {
    return x.p_ == y.p_ && x.v_ == y.v_;
  }

 private:
  static PrimeField raw(std::uint64_t v, std::uint64_t p) {
    PrimeField f;
    f.v_ = v;
    f.p_ = p;
    return f;
  }
  void check_same(const PrimeField& o) const;

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 2;
};

/// GF(p^k) presented as GF(p)[t]/(m(t)) with m the lexicographically first
/// monic irreducible polynomial of degree k. Shared, immutable.
class ExtField {
 public:
  static constexpr std::size_t kMaxDegree = 8;

  static std::shared_ptr<const ExtField> create(std::uint64_t p, unsigned k);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t order() const;
  /// Modulus coefficients m_0..m_k (m_k = 1).
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  std::string name() const;

 private:
  ExtField(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
      : p_(p), k_(k), modulus_(std::move(modulus)) {}

  std::uint64_t p_;
  unsigned k_;
  std::vector<std::uint64_t> modulus_;
};

class ExtFieldElement {
 public:
  struct Domain {
    std::shared_ptr<const ExtField> field;
    bool operator==(const Domain& o) const;
    std::string name() const { return field ? field->name() : "GF(?)"; }
  };

  ExtFieldElement() = default;

  static ExtFieldElement from_int(const Domain& dom, long value);
  static ExtFieldElement from_rational(const Domain& dom, const Rational& value);
  /// Element with the given base-p digits (coefficients of 1, t, t^2, ...).
  static ExtFieldElement from_coefficients(const Domain& dom, const std::vector<std::uint64_t>& c);
  static ExtFieldElement random(const Domain& dom, std::mt19937_64& rng);
  /// Enumerates the field: index in [0, q) read as base-p digits.
  static ExtFieldElement from_index(const Domain& dom, std::uint64_t index);

  Domain domain() const { return {field_}; }
  bool is_zero() const;
  ExtFieldElement inverse() const;
  ExtFieldElement pow(std::uint64_t exponent) const;
  /// "[c0,c1,...]" in the polynomial basis.
  std::string str() const;

  ExtFieldElement operator-() const;
  ExtFieldElement& operator+=(const ExtFieldElement& o);
  ExtFieldElement& operator-=(const ExtFieldElement& o);
  ExtFieldElement& operator*=(const ExtFieldElement& o);
  ExtFieldElement& operator/=(const ExtFieldElement& o) { return *this *= o.inverse(); }

  friend ExtFieldElement operator+(ExtFieldElement x, const ExtFieldElement& y) { return x += y; }
  friend ExtFieldElement operator-(ExtFieldElement x, const ExtFieldElement& y) { return x -= y; }
  friend ExtFieldElement operator*(ExtFieldElement x, const ExtFieldElement& y) { return x *= y; }
  friend ExtFieldElement operator/(ExtFieldElement x, const ExtFieldElement& y) { return x /= y; }
  friend bool operator==(const ExtFieldElement& x, const ExtFieldElement& y);

 private:
  void check_same(const ExtFieldElement& o) const;

  std::shared_ptr<const ExtField> field_;
  std::array<std::uint32_t, ExtField::kMaxDegree> c_{};
};

}  // namespace g2split
