#pragma once

#include "g2split/catalog.hpp"
#include "g2split/surfaces.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace g2split {

/// Value and the three partials d/dx, d/dy, d/dz of a surface at a point.
template <Field K>
struct GradientReport {
  std::array<K, 3> point;
  K value;
  std::array<K, 3> gradient;
  bool is_singular = false;
};

/// Exact gradient report. is_singular means value and all partials are zero.
template <Field K>
GradientReport<K> gradient(const QPoly& surface, const std::array<K, 3>& point) {
  const auto dom = point[0].domain();
  std::vector<K> pt(point.begin(), point.end());
  GradientReport<K> r{point, evaluate_in(surface, pt, dom), {}, false};
  bool all_zero = r.value.is_zero();
  for (std::size_t i = 0; i < 3; ++i) {
    r.gradient[i] = evaluate_in(surface.derivative(surface.vars()[i]), pt, dom);
    all_zero = all_zero && r.gradient[i].is_zero();
  }
  r.is_singular = all_zero;
  return r;
}

/// z = -(1/82944) phi1(x, y) / phi2(x, y). Throws Undefined("Phi2Vanishes").
template <Field K>
K z_from_xy(const K& x, const K& y) {
  const auto& cat = SurfaceCatalog::instance();
  const auto dom = x.domain();
  std::vector<K> pt{x, y};
  K d = evaluate_in(cat.phi2, pt, dom);
  if (d.is_zero()) throw Undefined("Phi2Vanishes", "phi2(x, y) = 0");
  return K::from_rational(dom, cat.z_scale) * evaluate_in(cat.phi1, pt, dom) / d;
}

template <Field K>
struct ClassificationResult {
  std::array<K, 3> point;
  AutGroup group = AutGroup::Generic;
  K c1, c2;
  /// z - z_from_xy(x, y); absent when phi2(x, y) = 0.
  std::optional<K> z_relation;
};

/// Labels a point by the singular components of the (2,2) surface: D4 when on C1
/// with the z-relation, D6 when on C2 with it, inconclusive when on both.
template <Field K>
ClassificationResult<K> classify_automorphism(const std::array<K, 3>& p) {
  const auto& cat = SurfaceCatalog::instance();
  const auto dom = p[0].domain();
  std::vector<K> xy{p[0], p[1]};
  ClassificationResult<K> r{p, AutGroup::Generic, evaluate_in(cat.C1, xy, dom), evaluate_in(cat.C2, xy, dom), std::nullopt};
  try {
    r.z_relation = p[2] - z_from_xy(p[0], p[1]);
  } catch (const Undefined&) {
  }
  bool zrel = r.z_relation && r.z_relation->is_zero();
  bool on1 = zrel && r.c1.is_zero();
  bool on2 = zrel && r.c2.is_zero();
  if (on1 && on2) {
    r.group = AutGroup::Inconclusive;
  } else if (on1) {
    r.group = AutGroup::D4;
  } else if (on2) {
    r.group = AutGroup::D6;
  }
  return r;
}

/// Numeric gradient report at `digits` significant digits. Residuals are
/// relative to the sum of absolute term values at the point.
struct NumericGradientReport {
  std::array<std::string, 3> point;
  double relative_value = 0;
  std::array<double, 3> relative_gradient{};
  bool is_singular = false;
};

NumericGradientReport numeric_gradient(const QPoly& surface, const std::array<std::string, 3>& point, unsigned digits);

nlohmann::json verify_c3_system();
nlohmann::json verify_t3_points();
nlohmann::json verify_exceptional_table();
/// Throws Error(InsufficientPoints) when iso1 has fewer than `samples` usable GF(p)-points.
nlohmann::json verify_minors_on_iso1(std::uint64_t prime, int samples, std::uint64_t seed = 2);
nlohmann::json sample_c1_c2_singularity(int samples, unsigned digits, std::uint64_t seed = 2);

/// The three 2x2 minors of the Jacobian of theta, as numerators over the
/// common denominator, in row pairs (1,2), (1,3), (2,3).
const std::array<QPoly, 3>& theta_minor_numerators();

}  // namespace g2split
