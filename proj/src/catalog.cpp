#include "g2split/catalog.hpp"

#include "g2split/polytext.hpp"
#include "transcription.hpp"

#include <map>

namespace g2split {

namespace {

namespace tr = transcription;

const std::vector<std::string> kXYZ = {"x", "y", "z"};
const std::vector<std::string> kXY = {"x", "y"};
const std::vector<std::string> kUV = {"u", "v"};
const std::vector<std::string> kR = {"r1", "r2"};

QPoly parse_lines(const tr::Lines& lines, const std::vector<std::string>& vars) {
  std::string text;
  for (auto line : lines) {
    if (!text.empty()) text += ' ';
    text += line;
  }
  QPoly p = parse_infix(text, vars);
  if (p.vars() != vars) throw InvalidArgument("transcription uses an unexpected variable: " + text);
  return p;
}

Rational q(const char* text) { return Rational::parse(text); }

}  // namespace

std::string to_string(AutGroup g) {
  switch (g) {
    case AutGroup::D4: return "D4";
    case AutGroup::D6: return "D6";
    case AutGroup::Generic: return "generic";
    case AutGroup::Inconclusive: return "inconclusive";
  }
  return "?";
}

const SurfaceCatalog& SurfaceCatalog::instance() {
  static const SurfaceCatalog catalog;
  return catalog;
}

SurfaceCatalog::SurfaceCatalog() {
  S2 = parse_lines(tr::kS2, kXYZ);
  S3_lift = parse_lines(tr::kS3Mod5, kXYZ);
  S3mod5 = reduce_mod_p(S3_lift, 5);

  phi1 = parse_lines(tr::kPhi1, kXY);
  phi2 = parse_lines(tr::kPhi2, kXY);
  z_scale = Rational(mpz_class(-1), mpz_class(82944));
  C1 = parse_lines(tr::kC1, kXY);
  C2 = parse_lines(tr::kC2, kXY);
  C3a = parse_lines(tr::kC3a, kXY);
  C3b = parse_lines(tr::kC3b, kXY);
  c3_aux_num = parse_lines(tr::kC3AuxNum, kXY);
  c3_aux_den = parse_lines(tr::kC3AuxDen, kXY);
  c3_cubic = parse_lines(tr::kC3Cubic, kXY);

  theta_quadratic = parse_lines(tr::kThetaQuadratic, kUV);
  QPoly u = QPoly::variable(kUV, {}, "u");
  QPoly v = QPoly::variable(kUV, {}, "v");
  QPoly cubic = parse_lines(tr::kI3Cubic, kUV);
  const std::string quad_name = "-405+252u+4u^2-54v-12uv+3v^2 (J2 = 0)";
  theta[0] = {"ThetaUndefined", parse_lines(tr::kI1Num, kUV).scaled(144), {{"v", v, 1}, {quad_name, theta_quadratic, 2}}};
  theta[1] = {"ThetaUndefined", parse_lines(tr::kI2Num, kUV).scaled(-864), {{"v", v, 2}, {quad_name, theta_quadratic, 3}}};
  theta[2] = {"ThetaUndefined",
              (v - QPoly::constant(kUV, Rational(27))) * cubic.pow(3) * QPoly::constant(kUV, Rational(-243)),
              {{"v", v, 3}, {quad_name, theta_quadratic, 5}}};
  iso1 = parse_lines(tr::kIso1, kUV);

  eqr_E = parse_lines(tr::kEqrE, kUV);
  QPoly P = parse_lines(tr::kEqrP, kUV);
  const std::string e_name = "4v^2-18uv+27v-u^2v+4u^3";
  eqr[0] = {"EqRUndefined", (v * P.pow(3)).scaled(27), {{e_name, eqr_E, 1}}};
  eqr[1] = {"EqRUndefined",
            (v * P.pow(4)).scaled(-1296),
            {{"v-27", v - QPoly::constant(kUV, Rational(27)), 1}, {e_name, eqr_E, 1}}};

  rho_K = parse_lines(tr::kRhoK, kR);
  QPoly r1 = QPoly::variable(kR, {}, "r1");
  QPoly r2 = QPoly::variable(kR, {}, "r2");
  const std::string k_name = "-1152r2^2+96r2r1+r1^2 (J2 = 0)";
  rho[0] = {"RhoUndefined", parse_lines(tr::kRho1Num, kR).scaled(q("9/4")), {{"r1", r1, 1}, {k_name, rho_K, 2}}};
  rho[1] = {"RhoUndefined", parse_lines(tr::kRho2Num, kR).scaled(q("27/8")), {{"r1", r1, 2}, {k_name, rho_K, 3}}};
  rho[2] = {"RhoUndefined", r2.pow(9).scaled(q("-521838526464")), {{"r1", r1, 2}, {k_name, rho_K, 5}}};
  rho_chart_scale = {q("1/729"), q("1/1679616")};
  J2locus = parse_lines(tr::kJ2Locus, kR);
  r_system = {parse_lines(tr::kRSystem1, kR), parse_lines(tr::kRSystem2, kR), parse_lines(tr::kRSystem3, kR)};

  // Exceptional points of theta, as printed.
  exceptional_points = {
      {"(-7/2, 2)", {{"-7/2", "2"}}, std::nullopt, std::nullopt, 0},
      {"(-775/8, 125/96), (25/2, 250/9)",
       {{"-775/8", "125/96"}, {"25/2", "250/9"}},
       std::array<Rational, 3>{q("-8019/20"), q("-1240029/200"), q("531441/100000")},
       AutGroup::D4,
       2},
      {"(27 -+ 77/2 sqrt(-1), 23 +- 77/9 sqrt(-1))",
       {{"27-77/2*sqrt(-1)", "23+77/9*sqrt(-1)"}, {"27+77/2*sqrt(-1)", "23-77/9*sqrt(-1)"}},
       std::array<Rational, 3>{q("729/2116"), q("1240029/97336"), q("531441/13181630464")},
       AutGroup::D4,
       2},
      {"(-15 +- 35/8 sqrt(5), 25/2 +- 35/6 sqrt(5))",
       {{"-15+35/8*sqrt(5)", "25/2+35/6*sqrt(5)"}, {"-15-35/8*sqrt(5)", "25/2-35/6*sqrt(5)"}},
       std::array<Rational, 3>{q("81"), q("-5103/25"), q("-729/12500")},
       AutGroup::D6,
       2},
  };
  exceptional_errata = {
      {"row 2, first point", "(-775/8, 125/96)", "(-775/8, 125/36)", 1},
      {"row 2, i3", "531441/100000", "-531441/100000", 1},
      {"row 4, u", "-15 +- 35/8 sqrt(5)", "-15/8 +- 35/8 sqrt(5)", 3},
  };
  exceptional_corrected = exceptional_points;
  exceptional_corrected[1].uv[0] = {"-775/8", "125/36"};
  (*exceptional_corrected[1].invariants)[2] = q("-531441/100000");
  exceptional_corrected[3].uv = {{"-15/8+35/8*sqrt(5)", "25/2+35/6*sqrt(5)"}, {"-15/8-35/8*sqrt(5)", "25/2-35/6*sqrt(5)"}};

  t3_r_points = {{{q("-512/2187"), q("-256/6561")}, {q("2/243"), q("1/11664")}, {q("-4000/2187"), q("2500/6561")}}};
  t3_points = {{{q("-8019/20"), q("-1240029/200"), q("-531441/100000")},
                {q("81"), q("-5103/25"), q("-729/12500")},
                {q("729/2116"), q("1240029/97336"), q("531441/13181630464")}}};
  t3_groups = {AutGroup::D4, AutGroup::D4, AutGroup::D6};

  c3_points = {{{q("0"), q("729/50")}, {q("81/20"), q("-729/200")}, {q("-36/5"), q("1512/25")}}};
  c3_lifted_point = {q("0"), q("729/50"), q("729/12800000")};
}

const QPoly& SurfaceCatalog::poly(const std::string& name) const {
  const std::map<std::string, const QPoly*> table = {
      {"S2", &S2},
      {"S3mod5", &S3_lift},
      {"phi1", &phi1},
      {"phi2", &phi2},
      {"C1", &C1},
      {"C2", &C2},
      {"C3a", &C3a},
      {"C3b", &C3b},
      {"c3_cubic", &c3_cubic},
      {"iso1", &iso1},
      {"J2locus", &J2locus},
      {"rsys1", &r_system[0]},
      {"rsys2", &r_system[1]},
      {"rsys3", &r_system[2]},
      {"theta_quadratic", &theta_quadratic},
      {"eqr_E", &eqr_E},
      {"rho_K", &rho_K},
  };
  auto it = table.find(name);
  if (it == table.end()) {
    std::string valid;
    for (const auto& n : poly_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw InvalidArgument("unknown surface '" + name + "' (valid: " + valid + ")");
  }
  return *it->second;
}

std::vector<std::string> SurfaceCatalog::poly_names() const {
  return {"S2",  "S3mod5",  "phi1",  "phi2",  "C1",    "C2",    "C3a",         "C3b",   "c3_cubic",
          "iso1", "J2locus", "rsys1", "rsys2", "rsys3", "theta_quadratic", "eqr_E", "rho_K"};
}

}  // namespace g2split
