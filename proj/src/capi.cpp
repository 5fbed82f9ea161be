#include "g2split/g2split.h"

#include "g2split/invariants.hpp"
#include "g2split/polytext.hpp"
#include "g2split/singular.hpp"
#include "g2split/suite.hpp"
#include "g2split/surfaces.hpp"

#include <cstdio>
#include <cstring>
#include <sstream>
#include <string>
#include <variant>

using nlohmann::json;
using namespace g2split;

struct g2s_session {
  std::string error;
  std::string kind;
  SuiteOptions options;
};

using AnyPoly = std::variant<MultiPoly<Rational>, MultiPoly<QuadExt>, MultiPoly<PrimeField>, MultiPoly<ExtFieldElement>>;

struct g2s_poly {
  AnyPoly p;
};

namespace {

using AnyDomain = std::variant<Rational::Domain, QuadExt::Domain, PrimeField::Domain, ExtFieldElement::Domain>;

g2s_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return G2S_PARSE_ERROR;
    case ErrorCode::DomainMismatch: return G2S_DOMAIN_MISMATCH;
    case ErrorCode::DenominatorVanishes: return G2S_DENOMINATOR_VANISHES;
    case ErrorCode::DenominatorNotUnit: return G2S_DENOMINATOR_NOT_UNIT;
    case ErrorCode::InvalidArgument: return G2S_INVALID_ARGUMENT;
    case ErrorCode::UnknownVariable: return G2S_UNKNOWN_VARIABLE;
    case ErrorCode::Undefined: return G2S_UNDEFINED;
    case ErrorCode::InsufficientPoints: return G2S_INSUFFICIENT_POINTS;
    case ErrorCode::Io: return G2S_IO_ERROR;
  }
  return G2S_INTERNAL_ERROR;
}

// Runs fn, translating exceptions into a status and the session's error fields.
template <class Fn>
g2s_status guarded(g2s_session* s, Fn&& fn) {
  if (!s) return G2S_INVALID_ARGUMENT;
  s->error.clear();
  s->kind.clear();
  try {
    fn();
    return G2S_OK;
  } catch (const Undefined& e) {
    s->kind = e.kind();
    s->error = e.what();
    return G2S_UNDEFINED;
  } catch (const Error& e) {
    s->error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    s->error = e.what();
    return G2S_INTERNAL_ERROR;
  }
}

char* dup(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void put(char** out, const std::string& text) {
  if (!out) throw InvalidArgument("null output pointer");
  *out = dup(text);
}

std::string arg(const char* text, const char* what) {
  if (!text) throw InvalidArgument(std::string("missing ") + what);
  return text;
}

std::uint64_t parse_u64(std::string_view text, std::size_t at) {
  std::uint64_t v = 0;
  if (text.empty()) throw ParseError("expected a number", at);
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError("expected a number", at);
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

// "QQ", "QQ(sqrt(d))", "GF(p)", "GF(p^k)".
AnyDomain parse_domain(std::string_view name) {
  if (name == "QQ") return Rational::Domain{};
  if (name.rfind("QQ(sqrt(", 0) == 0 && name.size() > 10 && name.substr(name.size() - 2) == "))") {
    long d = std::stol(std::string(name.substr(8, name.size() - 10)));
    return QuadExt::Domain{d};
  }
  if (name.rfind("GF(", 0) == 0 && name.back() == ')') {
    std::string_view inner = name.substr(3, name.size() - 4);
    std::size_t caret = inner.find('^');
    if (caret == std::string_view::npos) {
      std::uint64_t p = parse_u64(inner, 3);
      PrimeField(0, p);  // validates p
      return PrimeField::Domain{p};
    }
    std::uint64_t p = parse_u64(inner.substr(0, caret), 3);
    std::uint64_t k = parse_u64(inner.substr(caret + 1), 4 + caret);
    if (k == 1) {
      PrimeField(0, p);
      return PrimeField::Domain{p};
    }
    return ExtFieldElement::Domain{ExtField::create(p, static_cast<unsigned>(k))};
  }
  throw ParseError("unknown field '" + std::string(name) + "' (use QQ, QQ(sqrt(d)), GF(p) or GF(p^k))", 0);
}

// Field from the caller's string, or Q / Q(sqrt d) inferred from the inputs.
AnyDomain choose_domain(const char* field, const std::vector<std::string>& inputs) {
  if (field && *field) return parse_domain(field);
  for (const auto& t : inputs) {
    if (QuadExt::looks_quadratic(t)) {
      long d = QuadExt::parse(t).d();
      for (const auto& other : inputs) {
        if (QuadExt::looks_quadratic(other) && QuadExt::parse(other).d() != d) {
          throw DomainMismatch("inputs mention different square roots");
        }
      }
      return QuadExt::Domain{d};
    }
  }
  return Rational::Domain{};
}

// Calls fn(parse, dom) with a scalar parser for the chosen field.
template <class Fn>
void with_field(const char* field, const std::vector<std::string>& inputs, Fn&& fn) {
  std::visit(
      [&](const auto& dom) {
        auto parse = [&dom](const std::string& t) { return parse_scalar(t, dom); };
        fn(parse, dom);
      },
      choose_domain(field, inputs));
}

template <Field K>
json triple(const AbsoluteInvariants<K>& t) {
  return {{"i1", t.i1.str()}, {"i2", t.i2.str()}, {"i3", t.i3.str()}};
}

template <Field K, std::size_t N>
json coefficient_list(const std::array<K, N>& a) {
  json out = json::array();
  for (const auto& c : a) out.push_back(c.str());
  return out;
}

std::string csv_number(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", q.to_double());
  return buf;
}

}  // namespace

extern "C" {

g2s_status g2s_session_new(g2s_session** out) {
  if (!out) return G2S_INVALID_ARGUMENT;
  try {
    *out = new g2s_session();
    return G2S_OK;
  } catch (...) {
    return G2S_INTERNAL_ERROR;
  }
}

void g2s_session_free(g2s_session* session) { delete session; }

g2s_status g2s_set_seed(g2s_session* s, uint64_t seed) {
  return guarded(s, [&] { s->options.seed = seed; });
}

g2s_status g2s_set_precision(g2s_session* s, unsigned digits) {
  return guarded(s, [&] {
    if (digits < 50) throw InvalidArgument("precision must be at least 50 digits");
    s->options.precision = digits;
  });
}

g2s_status g2s_set_prime(g2s_session* s, uint64_t prime) {
  return guarded(s, [&] {
    if (!is_prime(prime) || prime <= 5 || prime >= (1ull << 31)) {
      throw InvalidArgument("prime must be a prime between 7 and 2^31");
    }
    s->options.prime = prime;
  });
}

const char* g2s_last_error(const g2s_session* s) { return s ? s->error.c_str() : "null session"; }

const char* g2s_last_error_kind(const g2s_session* s) { return s ? s->kind.c_str() : ""; }

const char* g2s_status_name(g2s_status status) {
  switch (status) {
    case G2S_OK: return "ok";
    case G2S_PARSE_ERROR: return "parse_error";
    case G2S_DOMAIN_MISMATCH: return "domain_mismatch";
    case G2S_DENOMINATOR_VANISHES: return "denominator_vanishes";
    case G2S_DENOMINATOR_NOT_UNIT: return "denominator_not_unit";
    case G2S_INVALID_ARGUMENT: return "invalid_argument";
    case G2S_UNKNOWN_VARIABLE: return "unknown_variable";
    case G2S_UNDEFINED: return "undefined";
    case G2S_INSUFFICIENT_POINTS: return "insufficient_points";
    case G2S_IO_ERROR: return "io_error";
    case G2S_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

void g2s_string_free(char* text) { std::free(text); }

g2s_status g2s_invariants(g2s_session* s, const char* const coefficients[7], const char* field, char** json_out) {
  return guarded(s, [&] {
    if (!coefficients) throw InvalidArgument("missing coefficients");
    std::vector<std::string> in;
    for (int i = 0; i < 7; ++i) in.push_back(arg(coefficients[i], "sextic coefficient"));
    with_field(field, in, [&](auto parse, const auto& dom) {
      using K = decltype(parse(in[0]));
      SexticForm<K> f;
      for (std::size_t i = 0; i < 7; ++i) f.a[i] = parse(in[i]);
      bool all_zero = std::all_of(f.a.begin(), f.a.end(), [](const K& c) { return c.is_zero(); });
      if (all_zero) throw InvalidArgument("the zero form has no invariants");
      auto J = igusa_from_sextic(f);
      json out = {{"field", dom.name()},
                  {"sextic", coefficient_list(f.a)},
                  {"J2", J.J2.str()},
                  {"J4", J.J4.str()},
                  {"J6", J.J6.str()},
                  {"J10", J.J10.str()},
                  {"J10_vanishes", J.J10.is_zero()}};
      try {
        auto t = absolute_from_igusa(J);
        out["i1"] = t.i1.str();
        out["i2"] = t.i2.str();
        out["i3"] = t.i3.str();
      } catch (const Undefined& e) {
        out["i1"] = out["i2"] = out["i3"] = nullptr;
        out["flag"] = e.kind();
      }
      put(json_out, out.dump());
    });
  });
}

g2s_status g2s_cubic_pair(g2s_session* s, const char* const f[4], const char* const g[4], const char* field,
                          char** json_out) {
  return guarded(s, [&] {
    if (!f || !g) throw InvalidArgument("missing cubic coefficients");
    std::vector<std::string> in;
    for (int i = 0; i < 4; ++i) in.push_back(arg(f[i], "coefficient of F"));
    for (int i = 0; i < 4; ++i) in.push_back(arg(g[i], "coefficient of G"));
    with_field(field, in, [&](auto parse, const auto& dom) {
      using K = decltype(parse(in[0]));
      CubicPair<K> pair;
      for (std::size_t i = 0; i < 4; ++i) {
        pair.f[i] = parse(in[i]);
        pair.g[i] = parse(in[4 + i]);
      }
      json out = {{"field", dom.name()}, {"H", pair_H(pair).str()}};
      try {
        auto [r1, r2] = pair_r1_r2(pair);
        out["r1"] = r1.str();
        out["r2"] = r2.str();
      } catch (const Undefined& e) {
        out["r1"] = out["r2"] = nullptr;
        out["r_flag"] = e.kind();
      }
      try {
        out["r3"] = pair_r3(pair).str();
      } catch (const Undefined& e) {
        out["r3"] = nullptr;
        out["r3_flag"] = e.kind();
      }
      put(json_out, out.dump());
    });
  });
}

g2s_status g2s_curve_from_uv(g2s_session* s, const char* u, const char* v, const char* field, char** json_out) {
  return guarded(s, [&] {
    std::vector<std::string> in{arg(u, "u"), arg(v, "v")};
    with_field(field, in, [&](auto parse, const auto& dom) {
      auto [sextic, pair] = curve_from_uv(parse(in[0]), parse(in[1]));
      put(json_out, json{{"field", dom.name()},
                         {"sextic", coefficient_list(sextic.a)},
                         {"F", coefficient_list(pair.f)},
                         {"G", coefficient_list(pair.g)}}
                        .dump());
    });
  });
}

g2s_status g2s_theta(g2s_session* s, const char* u, const char* v, const char* field, char** json_out) {
  return guarded(s, [&] {
    std::vector<std::string> in{arg(u, "u"), arg(v, "v")};
    with_field(field, in, [&](auto parse, const auto& dom) {
      json out = triple(theta_genus2(parse(in[0]), parse(in[1])));
      out["field"] = dom.name();
      put(json_out, out.dump());
    });
  });
}

g2s_status g2s_uv_to_r(g2s_session* s, const char* u, const char* v, const char* field, char** json_out) {
  return guarded(s, [&] {
    std::vector<std::string> in{arg(u, "u"), arg(v, "v")};
    with_field(field, in, [&](auto parse, const auto& dom) {
      auto [r1, r2] = uv_to_r(parse(in[0]), parse(in[1]));
      auto [c1, c2] = to_rho_chart(r1, r2);
      put(json_out, json{{"field", dom.name()},
                         {"r1", r1.str()},
                         {"r2", r2.str()},
                         {"rho_chart", {{"r1", c1.str()}, {"r2", c2.str()}}}}
                        .dump());
    });
  });
}

g2s_status g2s_rho(g2s_session* s, const char* r1, const char* r2, const char* field, char** json_out) {
  return guarded(s, [&] {
    std::vector<std::string> in{arg(r1, "r1"), arg(r2, "r2")};
    with_field(field, in, [&](auto parse, const auto& dom) {
      json out = triple(rho(parse(in[0]), parse(in[1])));
      out["field"] = dom.name();
      put(json_out, out.dump());
    });
  });
}

g2s_status g2s_surface_names(g2s_session* s, char** json_out) {
  return guarded(s, [&] { put(json_out, json(SurfaceCatalog::instance().poly_names()).dump()); });
}

g2s_status g2s_surface_eval(g2s_session* s, const char* surface, const char* const* point, size_t n,
                            const char* field, char** json_out) {
  return guarded(s, [&] {
    std::string name = arg(surface, "surface");
    if (!point && n) throw InvalidArgument("missing point");
    std::vector<std::string> in;
    for (size_t i = 0; i < n; ++i) in.push_back(arg(point[i], "coordinate"));
    with_field(field, in, [&](auto parse, const auto& dom) {
      using K = decltype(parse(std::string()));
      std::vector<K> pt;
      for (const auto& t : in) pt.push_back(parse(t));
      K value = surface_eval(name, pt);
      put(json_out, json{{"surface", name}, {"field", dom.name()}, {"value", value.str()}}.dump());
    });
  });
}

g2s_status g2s_singular(g2s_session* s, const char* surface, const char* const point[3], int numeric,
                        const char* field, char** json_out) {
  return guarded(s, [&] {
    std::string name = arg(surface, "surface");
    if (!point) throw InvalidArgument("missing point");
    std::vector<std::string> in{arg(point[0], "x"), arg(point[1], "y"), arg(point[2], "z")};
    const QPoly& p = SurfaceCatalog::instance().poly(name);
    if (p.vars().size() != 3) throw InvalidArgument(name + " is not a surface in three variables");
    if (numeric) {
      if (field && *field && std::string(field) != "QQ") throw DomainMismatch("numeric mode takes rational points");
      auto r = numeric_gradient(p, {in[0], in[1], in[2]}, s->options.precision);
      put(json_out, json{{"surface", name},
                         {"mode", "numeric"},
                         {"precision_digits", s->options.precision},
                         {"point", r.point},
                         {"relative_value", r.relative_value},
                         {"relative_gradient", r.relative_gradient},
                         {"is_singular", r.is_singular}}
                        .dump());
      return;
    }
    with_field(field, in, [&](auto parse, const auto& dom) {
      using K = decltype(parse(in[0]));
      if (name == "S3mod5") surface_eval(name, std::vector<K>{parse(in[0]), parse(in[1]), parse(in[2])});
      auto g = gradient(p, std::array<K, 3>{parse(in[0]), parse(in[1]), parse(in[2])});
      put(json_out, json{{"surface", name},
                         {"mode", "exact"},
                         {"field", dom.name()},
                         {"point", coefficient_list(g.point)},
                         {"value", g.value.str()},
                         {"gradient", coefficient_list(g.gradient)},
                         {"is_singular", g.is_singular}}
                        .dump());
    });
  });
}

g2s_status g2s_z_from_xy(g2s_session* s, const char* x, const char* y, const char* field, char** json_out) {
  return guarded(s, [&] {
    std::vector<std::string> in{arg(x, "x"), arg(y, "y")};
    with_field(field, in, [&](auto parse, const auto& dom) {
      auto px = parse(in[0]), py = parse(in[1]);
      put(json_out, json{{"field", dom.name()}, {"x", px.str()}, {"y", py.str()}, {"z", z_from_xy(px, py).str()}}.dump());
    });
  });
}

g2s_status g2s_classify(g2s_session* s, const char* const point[3], const char* field, char** json_out) {
  return guarded(s, [&] {
    if (!point) throw InvalidArgument("missing point");
    std::vector<std::string> in{arg(point[0], "x"), arg(point[1], "y"), arg(point[2], "z")};
    with_field(field, in, [&](auto parse, const auto& dom) {
      using K = decltype(parse(in[0]));
      auto c = classify_automorphism(std::array<K, 3>{parse(in[0]), parse(in[1]), parse(in[2])});
      put(json_out, json{{"field", dom.name()},
                         {"point", coefficient_list(c.point)},
                         {"group", to_string(c.group)},
                         {"C1", c.c1.str()},
                         {"C2", c.c2.str()},
                         {"z_relation", c.z_relation ? json(c.z_relation->str()) : json(nullptr)},
                         {"basis", "C1/C2 loci of the (2,2) surface with the z relation"}}
                        .dump());
    });
  });
}

g2s_status g2s_check_ids(g2s_session* s, char** json_out) {
  return guarded(s, [&] { put(json_out, json(suite_ids()).dump()); });
}

g2s_status g2s_verify(g2s_session* s, const char* id, char** json_out, int* failed) {
  return guarded(s, [&] {
    std::string which = arg(id, "check id");
    std::vector<std::string> ids = which == "all" ? suite_ids() : std::vector<std::string>{which};
    json report = run_suite(ids, s->options);
    report["seed"] = s->options.seed;
    if (failed) *failed = report.at("overall") == "fail" ? 1 : 0;
    put(json_out, report.dump(2));
  });
}

g2s_status g2s_sample(g2s_session* s, const char* surface, const char* lo1, const char* hi1, const char* step1,
                      const char* lo2, const char* hi2, const char* step2, char** csv_out, char** skipped_out) {
  return guarded(s, [&] {
    auto q = [](const char* t, const char* what) { return Rational::parse(arg(t, what)); };
    SampleResult r = sample_surface(arg(surface, "surface"), q(lo1, "lo1"), q(hi1, "hi1"), q(step1, "step1"),
                                    q(lo2, "lo2"), q(hi2, "hi2"), q(step2, "step2"));
    std::ostringstream csv;
    csv << "i1,i2,i3,param1,param2\n";
    for (const auto& row : r.rows) {
      csv << csv_number(row.invariants[0]) << ',' << csv_number(row.invariants[1]) << ','
          << csv_number(row.invariants[2]) << ',' << row.param1.str() << ',' << row.param2.str() << '\n';
    }
    put(csv_out, csv.str());
    if (skipped_out) put(skipped_out, json{{"skipped", r.skipped}, {"max_relative_residual", r.max_relative_residual}}.dump());
  });
}

g2s_status g2s_poly_parse(g2s_session* s, const char* text, g2s_poly** out) {
  return guarded(s, [&] {
    if (!out) throw InvalidArgument("null output pointer");
    std::string t = arg(text, "polynomial text");
    AnyDomain dom = parse_domain(parse_poly_header(t).domain);
    *out = std::visit(
        [&](const auto& d) {
          using K = decltype(parse_scalar(std::string_view(), d));
          return new g2s_poly{from_text<K>(t, d)};
        },
        dom);
  });
}

g2s_status g2s_poly_parse_infix(g2s_session* s, const char* text, g2s_poly** out) {
  return guarded(s, [&] {
    if (!out) throw InvalidArgument("null output pointer");
    *out = new g2s_poly{parse_infix(arg(text, "expression"))};
  });
}

g2s_status g2s_poly_from_catalog(g2s_session* s, const char* name, g2s_poly** out) {
  return guarded(s, [&] {
    if (!out) throw InvalidArgument("null output pointer");
    std::string n = arg(name, "name");
    const auto& cat = SurfaceCatalog::instance();
    if (n == "S3mod5") {
      *out = new g2s_poly{cat.S3mod5};
    } else {
      *out = new g2s_poly{cat.poly(n)};
    }
  });
}

void g2s_poly_free(g2s_poly* poly) { delete poly; }

g2s_status g2s_poly_to_text(g2s_session* s, const g2s_poly* poly, char** text_out) {
  return guarded(s, [&] {
    if (!poly) throw InvalidArgument("null polynomial");
    put(text_out, std::visit([](const auto& p) { return to_text(p); }, poly->p));
  });
}

g2s_status g2s_poly_to_infix(g2s_session* s, const g2s_poly* poly, char** text_out) {
  return guarded(s, [&] {
    if (!poly) throw InvalidArgument("null polynomial");
    put(text_out, std::visit([](const auto& p) { return to_infix(p); }, poly->p));
  });
}

g2s_status g2s_poly_reduce_mod_p(g2s_session* s, const g2s_poly* poly, uint64_t prime, g2s_poly** out) {
  return guarded(s, [&] {
    if (!poly || !out) throw InvalidArgument("null polynomial");
    const auto* q = std::get_if<MultiPoly<Rational>>(&poly->p);
    if (!q) throw DomainMismatch("only polynomials over QQ can be reduced mod p");
    *out = new g2s_poly{reduce_mod_p(*q, prime)};
  });
}

g2s_status g2s_poly_eval(g2s_session* s, const g2s_poly* poly, const char* const* point, size_t n, char** value_out) {
  return guarded(s, [&] {
    if (!poly) throw InvalidArgument("null polynomial");
    if (!point && n) throw InvalidArgument("missing point");
    std::visit(
        [&](const auto& p) {
          using K = std::decay_t<decltype(p.terms().front().second)>;
          if (n != p.vars().size()) {
            throw InvalidArgument("polynomial has " + std::to_string(p.vars().size()) + " variables, got " +
                                  std::to_string(n) + " coordinates");
          }
          std::vector<K> pt;
          for (size_t i = 0; i < n; ++i) pt.push_back(parse_scalar(arg(point[i], "coordinate"), p.domain()));
          put(value_out, p.evaluate(pt).str());
        },
        poly->p);
  });
}

}  // extern "C"
