#include "g2split/singular.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <map>

namespace g2split {

using nlohmann::json;
using Real = boost::multiprecision::mpfr_float;

namespace {

template <Field K>
json str3(const std::array<K, 3>& a) {
  return {a[0].str(), a[1].str(), a[2].str()};
}

bool triple_equals(const AbsoluteInvariants<Rational>& t, const std::array<Rational, 3>& p) {
  return t.i1 == p[0] && t.i2 == p[1] && t.i3 == p[2];
}

// S2 restricted to fixed (x, y), as a univariate polynomial in z.
QPoly s2_fiber(const Rational& x, const Rational& y) {
  const auto& cat = SurfaceCatalog::instance();
  std::vector<QPoly::Term> terms;
  for (const auto& [m, c] : cat.S2.terms()) {
    Monomial n;
    n.e[0] = m.e[2];
    terms.emplace_back(n, c * x.pow(m.e[0]) * y.pow(m.e[1]));
  }
  return QPoly::from_terms({"z"}, {}, std::move(terms));
}

template <Field K>
json gradient_json(const GradientReport<K>& g) {
  return {{"point", str3(g.point)},
          {"value", g.value.str()},
          {"gradient", str3(g.gradient)},
          {"is_singular", g.is_singular}};
}

template <Field K>
json classification_json(const ClassificationResult<K>& c) {
  return {{"point", str3(c.point)},
          {"group", to_string(c.group)},
          {"C1", c.c1.str()},
          {"C2", c.c2.str()},
          {"z_relation", c.z_relation ? json(c.z_relation->str()) : json("undefined (phi2 = 0)")},
          {"label", "per the C1/C2 loci of the (2,2) surface"}};
}

Real to_real(const Rational& q) { return Real(q.num().get_str()) / Real(q.den().get_str()); }

// |value| / sum |terms| of p at a real point.
double relative_residual(const QPoly& p, const std::vector<Real>& pt) {
  Real value = p.evaluate_mapped<Real>(pt, [](const Rational& c) { return to_real(c); }, Real(0));
  Real scale = p.evaluate_mapped<Real>(
      std::vector<Real>{abs(pt[0]), abs(pt[1]), abs(pt[2])}, [](const Rational& c) { return to_real(c.abs()); },
      Real(0));
  if (scale == 0) return 0.0;
  return static_cast<double>(Real(abs(value) / scale));
}

struct PrecisionScope {
  explicit PrecisionScope(unsigned digits) : saved(Real::default_precision()) { Real::default_precision(digits); }
  ~PrecisionScope() { Real::default_precision(saved); }
  unsigned saved;
};

template <Field K>
K parse_coordinate(const std::string& text, const typename K::Domain& dom);

template <>
QuadExt parse_coordinate<QuadExt>(const std::string& text, const QuadExt::Domain& dom) {
  return QuadExt::parse(text, dom.d);
}

long sqrt_d_of(const std::string& a, const std::string& b) {
  for (const auto& t : {a, b}) {
    if (QuadExt::looks_quadratic(t)) return QuadExt::parse(t).d();
  }
  return 0;
}

// Evaluates theta, the minors and the sextic discriminant at one table point.
template <Field K>
json table_point(const K& u, const K& v, const ExceptionalRecord& row, bool& reproduced, bool& group_ok) {
  json out = {{"u", u.str()}, {"v", v.str()}};
  const auto dom = u.domain();
  auto [sextic, pair] = curve_from_uv(u, v);
  (void)pair;
  out["sextic_discriminant"] = sextic_discriminant(sextic).str();
  std::vector<K> pt{u, v};
  json minors = json::array();
  bool minors_zero = true;
  for (const auto& m : theta_minor_numerators()) {
    K value = evaluate_in(m, pt, dom);
    minors.push_back(value.str());
    minors_zero = minors_zero && value.is_zero();
  }
  out["minor_numerators"] = minors;
  out["minors_vanish"] = minors_zero;
  try {
    auto t = theta(u, v);
    out["theta"] = {t.i1.str(), t.i2.str(), t.i3.str()};
    if (!row.invariants) {
      out["genus2"] = !t.i3.is_zero();
      reproduced = t.i3.is_zero();
      return out;
    }
    std::array<K, 3> expected;
    for (std::size_t i = 0; i < 3; ++i) expected[i] = K::from_rational(dom, (*row.invariants)[i]);
    bool match = t.i1 == expected[0] && t.i2 == expected[1] && t.i3 == expected[2];
    out["matches_listed"] = match;
    reproduced = reproduced && match;
    auto cls = classify_automorphism(std::array<K, 3>{t.i1, t.i2, t.i3});
    out["classification"] = classification_json(cls);
    bool agrees = row.aut && cls.group == *row.aut;
    out["group_matches_listed"] = agrees;
    group_ok = group_ok && agrees;
  } catch (const Undefined& e) {
    out["theta"] = std::string(e.what());
    reproduced = false;
  }
  return out;
}

json check_table(const std::vector<ExceptionalRecord>& table, int& mismatched_points, bool& degenerate_ok, bool& groups_ok) {
  json rows = json::array();
  mismatched_points = 0;
  degenerate_ok = true;
  groups_ok = true;
  for (const auto& row : table) {
    json points = json::array();
    for (const auto& [us, vs] : row.uv) {
      bool reproduced = true;
      long d = sqrt_d_of(us, vs);
      json pj;
      if (d == 0) {
        pj = table_point(Rational::parse(us), Rational::parse(vs), row, reproduced, groups_ok);
      } else {
        QuadExt::Domain dom{d};
        pj = table_point(parse_coordinate<QuadExt>(us, dom), parse_coordinate<QuadExt>(vs, dom), row, reproduced,
                         groups_ok);
      }
      if (!row.invariants) {
        bool disc_zero = pj.at("sextic_discriminant") == "0";
        degenerate_ok = degenerate_ok && disc_zero && reproduced;
      } else if (!reproduced) {
        ++mismatched_points;
      }
      points.push_back(pj);
    }
    json r = {{"row", row.label}, {"points", points}, {"e3", row.e3}};
    if (row.invariants) r["listed"] = {(*row.invariants)[0].str(), (*row.invariants)[1].str(), (*row.invariants)[2].str()};
    if (row.aut) r["listed_group"] = to_string(*row.aut);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

const std::array<QPoly, 3>& theta_minor_numerators() {
  static const std::array<QPoly, 3> minors = [] {
    const auto& cat = SurfaceCatalog::instance();
    struct Part {
      QPoly n, d;
    };
    std::array<Part, 3> parts;
    for (std::size_t i = 0; i < 3; ++i) parts[i] = {cat.theta[i].num, cat.theta[i].den_poly()};
    // d(n/d)/dw = (n_w d - n d_w) / d^2; keep only the numerators.
    auto dnum = [](const Part& p, const char* w) { return p.n.derivative(w) * p.d - p.n * p.d.derivative(w); };
    std::array<QPoly, 3> out;
    const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
    for (std::size_t k = 0; k < 3; ++k) {
      const Part& a = parts[static_cast<std::size_t>(pairs[k].first)];
      const Part& b = parts[static_cast<std::size_t>(pairs[k].second)];
      out[k] = dnum(a, "u") * dnum(b, "v") - dnum(a, "v") * dnum(b, "u");
    }
    return out;
  }();
  return minors;
}

NumericGradientReport numeric_gradient(const QPoly& surface, const std::array<std::string, 3>& point, unsigned digits) {
  if (digits < 50) throw InvalidArgument("numeric mode needs at least 50 digits");
  PrecisionScope scope(digits);
  std::vector<Real> pt;
  for (const auto& s : point) pt.push_back(to_real(Rational::parse(s)));
  NumericGradientReport r;
  r.point = point;
  r.relative_value = relative_residual(surface, pt);
  double tol = std::pow(10.0, -static_cast<double>(digits) / 2);
  bool small = r.relative_value < tol;
  for (std::size_t i = 0; i < 3; ++i) {
    r.relative_gradient[i] = relative_residual(surface.derivative(surface.vars()[i]), pt);
    small = small && r.relative_gradient[i] < tol;
  }
  r.is_singular = small;
  return r;
}

json verify_c3_system() {
  const auto& cat = SurfaceCatalog::instance();
  json details = json::array();
  json discrepancies = json::array();
  bool first_on_surface = false, others_off = true;
  for (std::size_t k = 0; k < cat.c3_points.size(); ++k) {
    const auto& [x, y] = cat.c3_points[k];
    std::vector<Rational> xy{x, y};
    Rational c3a = cat.C3a.evaluate(xy), c3b = cat.C3b.evaluate(xy);
    Rational cubic = cat.c3_cubic.evaluate(xy);
    Rational aux_den = cat.c3_aux_den.evaluate(xy);
    json d = {{"point", {x.str(), y.str()}},
              {"C3_first", c3a.str()},
              {"C3_second", c3b.str()},
              {"cubic", cubic.str()},
              {"C1", cat.C1.evaluate(xy).str()},
              {"C2", cat.C2.evaluate(xy).str()},
              {"phi2", cat.phi2.evaluate(xy).str()}};
    d["aux_relation"] = aux_den.is_zero() ? json("undefined") : json((y - cat.c3_aux_num.evaluate(xy) / aux_den).str());
    d["satisfies_C3"] = c3a.is_zero() && c3b.is_zero();
    d["satisfies_aux_relation"] = !aux_den.is_zero() && (y - cat.c3_aux_num.evaluate(xy) / aux_den).is_zero();
    d["satisfies_cubic"] = cubic.is_zero();
    // No z above (x, y) is singular when S2 and dS2/dz share no root.
    QPoly fiber = s2_fiber(x, y);
    Rational res = resultant_value(fiber, fiber.derivative("z"), "z");
    d["fiber_resultant_S2_dS2dz"] = res.str();
    if (res.is_zero() && k != 0) {
      // A repeated root in z; for these fibers it is the triple root -c2 / (3 c3).
      Rational z = -fiber.coefficient({2}) / (Rational(3) * fiber.coefficient({3}));
      auto g = gradient(cat.S2, std::array<Rational, 3>{x, y, z});
      d["point_above"] = gradient_json(g);
      if (g.is_singular) {
        discrepancies.push_back("(" + x.str() + ", " + y.str() + ") has no lift through phi1/phi2, yet (" + x.str() +
                                ", " + y.str() + ", " + z.str() + ") is a singular point of S2");
      }
    }
    try {
      Rational z = z_from_xy(x, y);
      auto g = gradient(cat.S2, std::array<Rational, 3>{x, y, z});
      d["lift"] = gradient_json(g);
      d["classification"] = classification_json(classify_automorphism(std::array<Rational, 3>{x, y, z}));
      if (k == 0) {
        first_on_surface = g.is_singular && g.value.is_zero() &&
                           std::array<Rational, 3>{x, y, z} == cat.c3_lifted_point;
      } else if (g.value.is_zero()) {
        others_off = false;
      }
    } catch (const Undefined& e) {
      d["lift"] = e.kind();
      if (k == 0) first_on_surface = false;
    }
    if (!cubic.is_zero()) {
      discrepancies.push_back("(" + x.str() + ", " + y.str() + ") does not satisfy the displayed cubic (value " +
                              cubic.str() + ")");
    }
    if (!(c3a.is_zero() && c3b.is_zero())) {
      discrepancies.push_back("(" + x.str() + ", " + y.str() + ") does not satisfy both C3 equations");
    }
    details.push_back(d);
  }
  std::string status = !(first_on_surface && others_off) ? "fail" : (discrepancies.empty() ? "pass" : "discrepancy");
  return {{"check", "verify_c3_system"},
          {"status", status},
          {"only_first_lift_on_surface", first_on_surface && others_off},
          {"discrepancies", discrepancies},
          {"details", details}};
}

json verify_t3_points() {
  const auto& cat = SurfaceCatalog::instance();
  json details = json::array();
  bool system_ok = true, on_s2 = true, j2_nonzero = true;
  std::vector<int> pairing;
  std::vector<AutGroup> groups;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& [r1, r2] = cat.t3_r_points[k];
    std::vector<Rational> rp{r1, r2};
    json d = {{"r", {r1.str(), r2.str()}}};
    json sys = json::array();
    for (const auto& p : cat.r_system) {
      Rational value = p.evaluate(rp);
      sys.push_back(value.str());
      system_ok = system_ok && value.is_zero();
    }
    d["system_residuals"] = sys;
    Rational j2 = cat.J2locus.evaluate(rp);
    d["J2locus"] = j2.str();
    j2_nonzero = j2_nonzero && !j2.is_zero();
    int match = -1;
    try {
      auto t = rho(r1, r2);
      d["rho"] = {t.i1.str(), t.i2.str(), t.i3.str()};
      for (std::size_t j = 0; j < 3; ++j) {
        if (triple_equals(t, cat.t3_points[j])) match = static_cast<int>(j);
      }
      std::array<Rational, 3> p{t.i1, t.i2, t.i3};
      auto g = gradient(cat.S2, p);
      d["S2"] = gradient_json(g);
      on_s2 = on_s2 && g.value.is_zero();
      auto cls = classify_automorphism(p);
      d["classification"] = classification_json(cls);
      groups.push_back(cls.group);
    } catch (const Undefined& e) {
      d["rho"] = std::string(e.what());
      on_s2 = false;
      groups.push_back(AutGroup::Generic);
    }
    d["matches_listed_point"] = match;
    pairing.push_back(match);
    details.push_back(d);
  }
  std::vector<int> sorted = pairing;
  std::sort(sorted.begin(), sorted.end());
  bool bijective = sorted == std::vector<int>{0, 1, 2};
  // Group of listed point j, as computed.
  std::array<AutGroup, 3> computed_by_listed{AutGroup::Generic, AutGroup::Generic, AutGroup::Generic};
  for (std::size_t k = 0; k < 3; ++k) {
    if (pairing[k] >= 0) computed_by_listed[static_cast<std::size_t>(pairing[k])] = groups[k];
  }
  std::vector<AutGroup> multiset(groups.begin(), groups.end());
  std::sort(multiset.begin(), multiset.end());
  bool multiset_ok = multiset == std::vector<AutGroup>{AutGroup::D4, AutGroup::D4, AutGroup::D6};
  json discrepancies = json::array();
  json printed = json::array(), computed = json::array();
  for (std::size_t j = 0; j < 3; ++j) {
    printed.push_back(to_string(cat.t3_groups[j]));
    computed.push_back(to_string(computed_by_listed[j]));
    if (computed_by_listed[j] != cat.t3_groups[j]) {
      discrepancies.push_back("listed point " + std::to_string(j + 1) + " is printed as " + to_string(cat.t3_groups[j]) +
                              " but classifies as " + to_string(computed_by_listed[j]));
    }
  }
  bool identity_pairing = pairing == std::vector<int>{0, 1, 2};
  if (!identity_pairing && bijective) discrepancies.push_back("the rho images are not in the printed order");
  bool ok = system_ok && bijective && on_s2 && j2_nonzero && multiset_ok;
  return {{"check", "verify_t3_points"},
          {"status", !ok ? "fail" : (discrepancies.empty() ? "pass" : "discrepancy")},
          {"system_satisfied", system_ok},
          {"pairing", pairing},
          {"bijective", bijective},
          {"on_S2", on_s2},
          {"J2locus_nonzero", j2_nonzero},
          {"groups_printed", printed},
          {"groups_computed", computed},
          {"group_multiset_ok", multiset_ok},
          {"discrepancies", discrepancies},
          {"details", details}};
}

json verify_exceptional_table() {
  const auto& cat = SurfaceCatalog::instance();
  int verbatim_mismatch = 0, corrected_mismatch = 0;
  bool degenerate_ok = true, degenerate_ok2 = true, groups_ok = true, groups_ok2 = true;
  json verbatim = check_table(cat.exceptional_points, verbatim_mismatch, degenerate_ok, groups_ok);
  json corrected = check_table(cat.exceptional_corrected, corrected_mismatch, degenerate_ok2, groups_ok2);
  // Sign of i3 at (25/2, 250/9): the exceptional table and the t3 list disagree.
  Rational i3 = theta(Rational::parse("25/2"), Rational::parse("250/9")).i3;
  std::string table_sign = (*cat.exceptional_points[1].invariants)[2].str();
  std::string t3_list_sign = cat.t3_points[0][2].str();
  json sign = {{"computed_i3", i3.str()},
               {"table_i3", table_sign},
               {"t3_list_i3", t3_list_sign},
               {"resolution", i3.str() == t3_list_sign ? "t3 list is correct" : (i3.str() == table_sign ? "table is correct" : "neither")}};
  json discrepancies = json::array();
  for (const auto& e : cat.exceptional_errata) {
    discrepancies.push_back(e.label + ": printed " + e.printed + ", computation gives " + e.corrected);
  }
  bool ok = corrected_mismatch == 0 && degenerate_ok && groups_ok2;
  std::string status = !ok ? "fail" : (verbatim_mismatch == 0 ? "pass" : "discrepancy");
  return {{"check", "verify_exceptional_table"},
          {"status", status},
          {"verbatim_points_not_reproduced", verbatim_mismatch},
          {"corrected_points_not_reproduced", corrected_mismatch},
          {"degenerate_row_ok", degenerate_ok},
          {"groups_match", groups_ok2},
          {"i3_sign", sign},
          {"discrepancies", discrepancies},
          {"verbatim", verbatim},
          {"corrected", corrected}};
}

json verify_minors_on_iso1(std::uint64_t prime, int samples, std::uint64_t seed) {
  if (!is_prime(prime) || prime <= 5) throw InvalidArgument("prime must be > 5");
  if (samples < 1) throw InvalidArgument("samples must be positive");
  const auto& cat = SurfaceCatalog::instance();
  PrimeField::Domain dom{prime};
  std::array<MultiPoly<PrimeField>, 3> minors;
  for (std::size_t k = 0; k < 3; ++k) minors[k] = reduce_mod_p(theta_minor_numerators()[k], prime);
  auto iso = reduce_mod_p(cat.iso1, prime);
  auto iso_u = iso.derivative("u"), iso_v = iso.derivative("v");
  auto quad = reduce_mod_p(cat.theta_quadratic, prime);
  auto coeffs_u = iso.coefficients_in("u");

  auto valid = [&](const PrimeField& u, const PrimeField& v) {
    return !v.is_zero() && !quad.evaluate(std::vector<PrimeField>{u, v}).is_zero();
  };
  auto minor_values = [&](const PrimeField& u, const PrimeField& v) {
    std::vector<std::uint64_t> out;
    for (const auto& m : minors) out.push_back(m.evaluate(std::vector<PrimeField>{u, v}).value());
    return out;
  };

  json on_curve = json::array();
  int found = 0, failures = 0;
  for (std::uint64_t vi = 1; vi < prime && found < samples; ++vi) {
    PrimeField v(static_cast<std::int64_t>(vi), prime);
    std::vector<std::uint64_t> c;
    for (const auto& cu : coeffs_u) {
      std::vector<PrimeField> pt{PrimeField(0, prime), v};
      c.push_back(cu.evaluate(pt).value());
    }
    for (std::uint64_t ui = 0; ui < prime && found < samples; ++ui) {
      std::uint64_t acc = 0;
      for (std::size_t k = c.size(); k-- > 0;) acc = (acc * ui + c[k]) % prime;
      if (acc != 0) continue;
      PrimeField u(static_cast<std::int64_t>(ui), prime);
      if (!valid(u, v)) continue;
      if (iso_u.evaluate(std::vector<PrimeField>{u, v}).is_zero() && iso_v.evaluate(std::vector<PrimeField>{u, v}).is_zero()) continue;
      auto values = minor_values(u, v);
      bool zero = std::all_of(values.begin(), values.end(), [](std::uint64_t x) { return x == 0; });
      if (!zero) ++failures;
      on_curve.push_back({{"u", ui}, {"v", vi}, {"minors", values}});
      ++found;
    }
  }
  if (found < samples) {
    throw Error(ErrorCode::InsufficientPoints, "iso1 has only " + std::to_string(found) + " usable GF(" +
                                                   std::to_string(prime) + ")-points, " + std::to_string(samples) +
                                                   " requested");
  }
  // Genericity: off the curve at least one minor is nonzero.
  std::mt19937_64 rng(seed);
  const std::vector<std::array<Rational, 2>> excluded = {
      {Rational::parse("-7/2"), Rational(2)}, {Rational::parse("-775/8"), Rational::parse("125/36")},
      {Rational::parse("25/2"), Rational::parse("250/9")}};
  json off_curve = json::array();
  int off_found = 0, off_failures = 0;
  for (int attempt = 0; off_found < samples && attempt < samples * 100; ++attempt) {
    PrimeField u = PrimeField::random(dom, rng), v = PrimeField::random(dom, rng);
    if (!valid(u, v) || iso.evaluate(std::vector<PrimeField>{u, v}).is_zero()) continue;
    bool table_point = std::any_of(excluded.begin(), excluded.end(), [&](const auto& p) {
      return PrimeField::from_rational(dom, p[0]) == u && PrimeField::from_rational(dom, p[1]) == v;
    });
    if (table_point) continue;
    auto values = minor_values(u, v);
    bool zero = std::all_of(values.begin(), values.end(), [](std::uint64_t x) { return x == 0; });
    if (zero) ++off_failures;
    off_curve.push_back({{"u", u.value()}, {"v", v.value()}, {"minors", values}});
    ++off_found;
  }
  bool ok = failures == 0 && off_failures == 0 && off_found == samples;
  return {{"check", "verify_minors_on_iso1"},
          {"status", ok ? "pass" : "fail"},
          {"prime", prime},
          {"minor_order", "row pairs (1,2), (1,3), (2,3) of d(i1,i2,i3)/d(u,v)"},
          {"curve_points", found},
          {"curve_points_with_nonzero_minor", failures},
          {"off_curve_points", off_found},
          {"off_curve_points_with_all_minors_zero", off_failures},
          {"details", {{{"on_curve", on_curve}}, {{"off_curve", off_curve}}}}};
}

json sample_c1_c2_singularity(int samples, unsigned digits, std::uint64_t seed) {
  if (digits < 50) throw InvalidArgument("precision must be at least 50 digits");
  const auto& cat = SurfaceCatalog::instance();
  PrecisionScope scope(digits);
  const double tol = std::pow(10.0, -static_cast<double>(digits) / 2);
  std::array<QPoly, 3> grads = {cat.S2.derivative("x"), cat.S2.derivative("y"), cat.S2.derivative("z")};
  std::mt19937_64 rng(seed);

  json components = json::array();
  bool all_ok = true;
  for (const auto& [name, curve] : {std::pair<std::string, const QPoly*>{"C1", &cat.C1}, {"C2", &cat.C2}}) {
    auto cy = curve->coefficients_in("y");  // quadratic in y, coefficients in x
    double max_value = 0, max_grad = 0;
    int used = 0, exact = 0, skipped = 0;
    for (int attempt = 0; used < samples && attempt < samples * 50; ++attempt) {
      std::uniform_int_distribution<long> num(-40, 40), den(1, 7);
      Rational x(mpz_class(num(rng)), mpz_class(den(rng)));
      std::vector<Rational> xpt{x, Rational(0)};
      Rational a = cy[2].evaluate(xpt), b = cy[1].evaluate(xpt), c = cy[0].evaluate(xpt);
      Rational disc = b * b - Rational(4) * a * c;
      if (a.is_zero() || disc.sign() < 0) {
        ++skipped;
        continue;
      }
      Rational root;
      try {
        if (rational_sqrt(disc, root)) {
          Rational y = (-b + root) / (Rational(2) * a);
          Rational z = z_from_xy(x, y);
          auto g = gradient(cat.S2, std::array<Rational, 3>{x, y, z});
          if (!g.is_singular) max_value = std::max(max_value, 1.0);
          ++exact;
        } else {
          Real y = (-to_real(b) + sqrt(to_real(disc))) / (2 * to_real(a));
          std::vector<Real> p2{to_real(x), y};
          Real ph2 = cat.phi2.evaluate_mapped<Real>(p2, [](const Rational& q) { return to_real(q); }, Real(0));
          if (ph2 == 0) throw Undefined("Phi2Vanishes", "phi2 = 0");
          Real z = to_real(cat.z_scale) *
                   cat.phi1.evaluate_mapped<Real>(p2, [](const Rational& q) { return to_real(q); }, Real(0)) / ph2;
          std::vector<Real> pt{to_real(x), y, z};
          max_value = std::max(max_value, relative_residual(cat.S2, pt));
          for (const auto& gp : grads) max_grad = std::max(max_grad, relative_residual(gp, pt));
        }
        ++used;
      } catch (const Undefined&) {
        ++skipped;
      }
    }
    bool ok = used == samples && max_value < tol && max_grad < tol;
    all_ok = all_ok && ok;
    components.push_back({{"component", name},
                          {"points", used},
                          {"exact_points", exact},
                          {"skipped", skipped},
                          {"max_relative_S2", max_value},
                          {"max_relative_gradient", max_grad},
                          {"tolerance", tol},
                          {"singular", ok}});
  }
  auto exact_point = gradient(cat.S2, cat.c3_lifted_point);
  all_ok = all_ok && exact_point.is_singular;
  return {{"check", "sample_c1_c2_singularity"},
          {"status", all_ok ? "pass" : "fail"},
          {"precision_digits", digits},
          {"exact_point", gradient_json(exact_point)},
          {"details", components}};
}

}  // namespace g2split
