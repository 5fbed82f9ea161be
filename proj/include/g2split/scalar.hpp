#pragma once

#include "g2split/finite_field.hpp"
#include "g2split/quadext.hpp"
#include "g2split/rational.hpp"

#include <concepts>
#include <string>

namespace g2split {

/// The exact coefficient domains: Rational, QuadExt, PrimeField, ExtFieldElement.
/// Every value carries its domain (d, p, or the extension field), so zero and one
/// are built from a domain rather than from the type alone.
template <class K>
concept Field = requires(const K a, const K b, const typename K::Domain dom, long n, const Rational q) {
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.domain() } -> std::same_as<typename K::Domain>;
  { dom == dom } -> std::convertible_to<bool>;
  { dom.name() } -> std::convertible_to<std::string>;
  { K::from_int(dom, n) } -> std::same_as<K>;
  { K::from_rational(dom, q) } -> std::same_as<K>;
  { a.str() } -> std::convertible_to<std::string>;
};

static_assert(Field<Rational>);
static_assert(Field<QuadExt>);
static_assert(Field<PrimeField>);
static_assert(Field<ExtFieldElement>);

template <Field K>
K field_pow(K base, unsigned long exponent) {
  K result = K::from_int(base.domain(), 1);
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

}  // namespace g2split
