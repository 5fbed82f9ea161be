#pragma once

#include "g2split/catalog.hpp"
#include "g2split/invariants.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace g2split {

/// theta(u, v) = (i1, i2, i3) from the stored parametrization. Throws
/// Undefined("ThetaUndefined") naming the vanishing denominator factor.
template <Field K>
AbsoluteInvariants<K> theta(const K& u, const K& v) {
  const auto& cat = SurfaceCatalog::instance();
  std::vector<K> pt{u, v};
  return {cat.theta[0].evaluate(pt), cat.theta[1].evaluate(pt), cat.theta[2].evaluate(pt)};
}

/// theta, additionally rejecting points whose curve is singular (i3 = 0 iff J10 = 0).
template <Field K>
AbsoluteInvariants<K> theta_genus2(const K& u, const K& v) {
  auto t = theta(u, v);
  if (t.i3.is_zero()) throw Undefined("NoGenus2Field", "no associated genus 2 field (J10=0)");
  return t;
}

/// (r1, r2) of the cubic pair from the stored (u, v) formulas. Throws
/// Undefined("EqRUndefined") naming the vanishing factor.
template <Field K>
std::pair<K, K> uv_to_r(const K& u, const K& v) {
  const auto& cat = SurfaceCatalog::instance();
  std::vector<K> pt{u, v};
  return {cat.eqr[0].evaluate(pt), cat.eqr[1].evaluate(pt)};
}

/// Rescales (r1, r2) from the (u, v) chart into the chart rho is written in.
template <Field K>
std::pair<K, K> to_rho_chart(const K& r1, const K& r2) {
  const auto& cat = SurfaceCatalog::instance();
  const auto dom = r1.domain();
  return {r1 * K::from_rational(dom, cat.rho_chart_scale[0]), r2 * K::from_rational(dom, cat.rho_chart_scale[1])};
}

/// rho(r1, r2) = (i1, i2, i3). Throws Undefined("RhoUndefined").
template <Field K>
AbsoluteInvariants<K> rho(const K& r1, const K& r2) {
  const auto& cat = SurfaceCatalog::instance();
  std::vector<K> pt{r1, r2};
  return {cat.rho[0].evaluate(pt), cat.rho[1].evaluate(pt), cat.rho[2].evaluate(pt)};
}

/// Value of a named catalog polynomial at a point. S3mod5 needs a point in
/// characteristic 5 (GF(5) or GF(5^k)); anything else is a DomainMismatch.
template <Field K>
K surface_eval(const std::string& name, const std::vector<K>& point) {
  const auto& cat = SurfaceCatalog::instance();
  const QPoly& p = cat.poly(name);
  if (point.empty()) throw InvalidArgument("empty evaluation point");
  if (name == "S3mod5") {
    const std::string dom_name = point[0].domain().name();
    if (dom_name != "GF(5)" && dom_name.rfind("GF(5^", 0) != 0) {
      throw DomainMismatch("S3mod5 is defined over GF(5); point is over " + dom_name);
    }
  }
  if (point.size() != p.vars().size()) {
    throw InvalidArgument(name + " takes " + std::to_string(p.vars().size()) + " coordinates");
  }
  return evaluate_in(p, point, point[0].domain());
}

/// Random rational with numerator in [-bound, bound] and denominator in [1, bound].
Rational random_rational(std::mt19937_64& rng, long bound);

/// Identity ids accepted by check_identity.
std::vector<std::string> identity_ids();

struct IdentityOptions {
  std::uint64_t seed = 2;
  int samples = 100;
  /// Also run the symbolic part (i3 cross-multiplication, S3 grid proof).
  bool symbolic = true;
};

/// Runs one identity check and returns
/// {identity, method, samples, status, witnesses[], details[]}.
nlohmann::json check_identity(const std::string& id, const IdentityOptions& options = {});

/// Proof that S3mod5(theta(u, v)) vanishes identically: evaluates the cleared
/// numerator on a product grid in GF(625) larger than its degree in u and in v.
nlohmann::json s3mod5_grid_proof();

/// Point cloud for plotting. "s3_via_theta" samples theta over a (u, v) grid;
/// "s2_via_oracle" samples curves y^2 = x^6 + a x^4 + b x^2 + 1 over an (a, b) grid.
struct SampleRow {
  std::array<Rational, 3> invariants;
  Rational param1, param2;
};
struct SampleResult {
  std::vector<SampleRow> rows;
  std::vector<std::string> skipped;
  /// Largest |S2| relative to its term scale over the rows (s2_via_oracle only).
  double max_relative_residual = 0;
};
SampleResult sample_surface(const std::string& surface, const Rational& lo1, const Rational& hi1, const Rational& step1,
                            const Rational& lo2, const Rational& hi2, const Rational& step2);

}  // namespace g2split
