#pragma once

#include "g2split/multipoly.hpp"
#include "g2split/ratfunc.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace g2split {

/// One factor of a denominator, reported by name when it vanishes.
struct DenominatorFactor {
  std::string name;
  QPoly poly;
  unsigned power = 1;
};

/// num / prod(factor^power). Evaluation checks each factor separately so the
/// error can say which one vanished.
struct FactoredRatFunc {
  std::string undefined_kind;
  QPoly num;
  std::vector<DenominatorFactor> den;

  QPoly den_poly() const {
    QPoly d = QPoly::constant(num.vars(), Rational(1));
    for (const auto& f : den) d = d * f.poly.pow(f.power);
    return d;
  }
  QRatFunc as_ratfunc() const { return {num, den_poly()}; }

  /// Throws Undefined(undefined_kind, factor name) when a factor vanishes.
  template <Field K>
  K evaluate(const std::vector<K>& point) const {
    const auto dom = point.at(0).domain();
    K d = K::from_int(dom, 1);
    for (const auto& f : den) {
      K value = evaluate_in(f.poly, point, dom);
      if (value.is_zero()) throw Undefined(undefined_kind, "denominator factor " + f.name + " vanishes");
      d = d * field_pow(value, f.power);
    }
    return evaluate_in(num, point, dom) / d;
  }
};

enum class AutGroup { D4, D6, Generic, Inconclusive };

std::string to_string(AutGroup g);

/// A row of the exceptional-point table: one or two (u, v) points given as
/// text ("27-77/2*sqrt(-1)"), the listed invariants, group and e3 count.
struct ExceptionalRecord {
  std::string label;
  std::vector<std::pair<std::string, std::string>> uv;
  std::optional<std::array<Rational, 3>> invariants;
  std::optional<AutGroup> aut;
  int e3 = 0;
};

/// A corrected reading of a table entry.
struct ExceptionalErratum {
  std::string label;
  std::string printed;
  std::string corrected;
  std::size_t row = 0;
};

/// Every stored equation, parsed once from the transcription and immutable after.
class SurfaceCatalog {
 public:
  static const SurfaceCatalog& instance();

  // Polynomials in (x, y, z) = (i1, i2, i3).
  QPoly S2;
  /// Integer lift of the mod-5 surface (coefficients in 0..4).
  QPoly S3_lift;
  MultiPoly<PrimeField> S3mod5;

  // Singular set of S2, in (x, y).
  QPoly phi1, phi2;
  Rational z_scale;  // -1/82944
  QPoly C1, C2, C3a, C3b;
  QPoly c3_aux_num, c3_aux_den, c3_cubic;

  // Parametrizations.
  std::array<FactoredRatFunc, 3> theta;  // (u, v)
  std::array<FactoredRatFunc, 2> eqr;    // (u, v)
  std::array<FactoredRatFunc, 3> rho;    // (r1, r2)
  QPoly theta_quadratic, eqr_E, rho_K;
  /// (r1, r2) of eqr -> rho's chart: multiply by these scales.
  std::array<Rational, 2> rho_chart_scale;
  QPoly iso1, J2locus;
  std::array<QPoly, 3> r_system;

  // Tabulated points.
  std::vector<ExceptionalRecord> exceptional_points;
  std::vector<ExceptionalErratum> exceptional_errata;
  /// exceptional_points with every erratum applied.
  std::vector<ExceptionalRecord> exceptional_corrected;
  std::array<std::array<Rational, 2>, 3> t3_r_points;
  std::array<std::array<Rational, 3>, 3> t3_points;
  std::array<AutGroup, 3> t3_groups;  // as printed next to t3_points
  std::array<std::array<Rational, 2>, 3> c3_points;
  std::array<Rational, 3> c3_lifted_point;

  /// Lookup by name: S2, S3mod5, phi1, phi2, C1, C2, C3a, C3b, c3_cubic, iso1,
  /// J2locus, rsys1, rsys2, rsys3, theta_quadratic, eqr_E, rho_K. S3mod5 returns the lift.
  const QPoly& poly(const std::string& name) const;
  std::vector<std::string> poly_names() const;

 private:
  SurfaceCatalog();
};

}  // namespace g2split
