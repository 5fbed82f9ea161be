// Command-line front end. Talks to the library only through the C interface.

#include "g2split/g2split.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string path;
  bool csv = false;
  bool json_flag = false;
};

struct Session {
  g2s_session* s = nullptr;
  Session() {
    if (g2s_session_new(&s) != G2S_OK) throw std::runtime_error("cannot create session");
  }
  ~Session() { g2s_session_free(s); }
};

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { g2s_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int write_text(const Output& out, const std::string& text) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (out.path.empty()) {
    std::cout << body;
    return kExitOk;
  }
  std::ofstream f(out.path);
  if (!f) {
    std::cout << json{{"error", {{"status", "io_error"}, {"message", "cannot write " + out.path}}}}.dump() << "\n";
    return kExitFailure;
  }
  f << body;
  return kExitOk;
}

// Flattens a JSON object of scalars into a two-line CSV.
std::string to_csv(const json& obj) {
  std::string header, row;
  for (const auto& [k, v] : obj.items()) {
    if (v.is_structured()) continue;
    header += (header.empty() ? "" : ",") + k;
    row += (row.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return header + "\n" + row + "\n";
}

int report_error(const Output& out, g2s_status st, const Session& session) {
  json e = {{"status", g2s_status_name(st)}, {"message", g2s_last_error(session.s)}};
  std::string kind = g2s_last_error_kind(session.s);
  if (!kind.empty()) e["kind"] = kind;
  write_text(out, json{{"error", e}}.dump());
  bool usage = st == G2S_PARSE_ERROR || st == G2S_INVALID_ARGUMENT || st == G2S_DOMAIN_MISMATCH;
  return usage ? kExitUsage : kExitFailure;
}

// Emits a JSON result from the library, or its error.
int emit(const Output& out, const Session& session, g2s_status st, const OwnedString& result) {
  if (st != G2S_OK) return report_error(out, st, session);
  json j = json::parse(result.str());
  return write_text(out, out.csv ? to_csv(j) : j.dump(2));
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

const char* field_arg(const std::string& field) { return field.empty() ? nullptr : field.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants, surfaces and singular loci for genus 2 curves with split Jacobians"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  std::uint64_t seed = 2;
  unsigned precision = 60;
  std::uint64_t prime = 10007;
  std::string field;
  app.add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--precision", precision, "Decimal digits for numeric mode (>= 50)")->capture_default_str();
  app.add_option("--prime", prime, "Prime for the Jacobian minor check")->capture_default_str();
  app.add_option("--field", field, "QQ, QQ(sqrt(d)), GF(p) or GF(p^k); default inferred from the input");
  auto* json_opt = app.add_flag("--json", out.json_flag, "JSON output (default except for sample)");
  app.add_flag("--csv", out.csv, "CSV output")->excludes(json_opt);
  app.add_option("--out", out.path, "Write output to this file");

  std::vector<std::string> sextic;
  auto* inv = app.add_subcommand("invariants", "Igusa and absolute invariants of a sextic (a0 .. a6, ascending)");
  inv->add_option("coefficients", sextic, "Seven coefficients")->required()->expected(7);

  std::vector<std::string> cf, cg, cuv;
  auto* cubic = app.add_subcommand("cubic-pair", "Invariants H, r1, r2, r3 of a cubic pair");
  auto* f_opt = cubic->add_option("--f", cf, "Ascending coefficients of F")->expected(4);
  cubic->add_option("--g", cg, "Ascending coefficients of G")->expected(4)->needs(f_opt);
  cubic->add_option("--uv", cuv, "Use the pair of the (u, v) family")->expected(2)->excludes(f_opt);

  std::vector<std::string> two;
  auto* th = app.add_subcommand("theta", "theta(u, v) = (i1, i2, i3)");
  th->add_option("uv", two, "u and v")->required()->expected(2);
  auto* rh = app.add_subcommand("rho", "rho(r1, r2) = (i1, i2, i3)");
  rh->add_option("r", two, "r1 and r2")->required()->expected(2);
  auto* ur = app.add_subcommand("uv-to-r", "(r1, r2) of the cubic pair at (u, v)");
  ur->add_option("uv", two, "u and v")->required()->expected(2);

  std::string surface = "S2";
  std::vector<std::string> coords;
  bool list_surfaces = false;
  auto* se = app.add_subcommand("surface-eval", "Value of a named surface or curve at a point");
  se->add_flag("--list", list_surfaces, "List surface names");
  se->add_option("surface", surface);
  se->add_option("coordinates", coords);

  bool numeric = false;
  std::vector<std::string> xyz;
  auto* sg = app.add_subcommand("singular", "Value and gradient of a surface at (x, y, z)");
  sg->add_option("--surface", surface, "Surface name")->capture_default_str();
  sg->add_flag("--numeric", numeric, "Use --precision digits instead of exact arithmetic");
  auto* xyz_opt = sg->add_option("point", xyz, "x y [z]; z defaults to the (x, y) relation")->expected(2, 3);

  auto* cl = app.add_subcommand("classify", "D4 / D6 label of (x, y, z) by the C1 / C2 loci");
  cl->add_option("point", xyz, "x y [z]; z defaults to the (x, y) relation")->required()->expected(2, 3);

  std::string check = "all";
  bool list_checks = false;
  auto* ve = app.add_subcommand("verify", "Run verification checks");
  ve->add_option("check", check, "Check id or 'all'")->capture_default_str();
  ve->add_flag("--list", list_checks, "List check ids");

  std::string sample_surface;
  std::vector<std::string> range1, range2;
  std::string skipped_path;
  auto* sa = app.add_subcommand("sample", "Point cloud (i1, i2, i3) for plotting");
  sa->add_option("surface", sample_surface, "s3_via_theta or s2_via_oracle")->required();
  sa->add_option("--range1", range1, "lo hi step of the first parameter")->required()->expected(3);
  sa->add_option("--range2", range2, "lo hi step of the second parameter")->required()->expected(3);
  sa->add_option("--skipped", skipped_path, "Write skipped grid points (JSON) to this file");

  std::string poly_name, poly_file;
  auto* po = app.add_subcommand("poly", "Text and infix forms of a stored polynomial or of a polynomial file");
  po->add_option("--name", poly_name, "Stored polynomial name");
  po->add_option("--in", poly_file, "File in the text format ('-' for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Session session;
  g2s_status st = g2s_set_seed(session.s, seed);
  if (st == G2S_OK) st = g2s_set_precision(session.s, precision);
  if (st == G2S_OK) st = g2s_set_prime(session.s, prime);
  if (st != G2S_OK) return report_error(out, st, session);
  const char* fld = field_arg(field);
  OwnedString r;

  if (inv->parsed()) {
    auto c = c_strings(sextic);
    return emit(out, session, g2s_invariants(session.s, c.data(), fld, &r.p), r);
  }
  if (cubic->parsed()) {
    if (!cuv.empty()) {
      OwnedString curve;
      st = g2s_curve_from_uv(session.s, cuv[0].c_str(), cuv[1].c_str(), fld, &curve.p);
      if (st != G2S_OK) return report_error(out, st, session);
      json c = json::parse(curve.str());
      cf = c["F"].get<std::vector<std::string>>();
      cg = c["G"].get<std::vector<std::string>>();
      if (!fld) {
        field = c["field"].get<std::string>();
        fld = field.c_str();
      }
    }
    if (cf.size() != 4 || cg.size() != 4) {
      std::cerr << "cubic-pair needs --f and --g, or --uv\n";
      return kExitUsage;
    }
    auto f = c_strings(cf), g = c_strings(cg);
    return emit(out, session, g2s_cubic_pair(session.s, f.data(), g.data(), fld, &r.p), r);
  }
  if (th->parsed()) return emit(out, session, g2s_theta(session.s, two[0].c_str(), two[1].c_str(), fld, &r.p), r);
  if (rh->parsed()) return emit(out, session, g2s_rho(session.s, two[0].c_str(), two[1].c_str(), fld, &r.p), r);
  if (ur->parsed()) return emit(out, session, g2s_uv_to_r(session.s, two[0].c_str(), two[1].c_str(), fld, &r.p), r);
  if (se->parsed()) {
    if (list_surfaces) {
      st = g2s_surface_names(session.s, &r.p);
      if (st != G2S_OK) return report_error(out, st, session);
      return write_text(out, json::parse(r.str()).dump(2));
    }
    auto c = c_strings(coords);
    return emit(out, session, g2s_surface_eval(session.s, surface.c_str(), c.data(), c.size(), fld, &r.p), r);
  }
  if (sg->parsed()) {
    if (xyz_opt->count() == 0) {
      std::cerr << "singular needs a point\n";
      return kExitUsage;
    }
    if (xyz.size() == 2) {
      // Complete (x, y) with z from the (x, y) relation.
      OwnedString z;
      st = g2s_z_from_xy(session.s, xyz[0].c_str(), xyz[1].c_str(), fld, &z.p);
      if (st != G2S_OK) return report_error(out, st, session);
      xyz.push_back(json::parse(z.str())["z"].get<std::string>());
    }
    auto c = c_strings(xyz);
    return emit(out, session, g2s_singular(session.s, surface.c_str(), c.data(), numeric ? 1 : 0, fld, &r.p), r);
  }
  if (cl->parsed()) {
    if (xyz.size() == 2) {
      OwnedString z;
      st = g2s_z_from_xy(session.s, xyz[0].c_str(), xyz[1].c_str(), fld, &z.p);
      if (st != G2S_OK) return report_error(out, st, session);
      xyz.push_back(json::parse(z.str())["z"].get<std::string>());
    }
    auto c = c_strings(xyz);
    return emit(out, session, g2s_classify(session.s, c.data(), fld, &r.p), r);
  }
  if (ve->parsed()) {
    if (list_checks) {
      st = g2s_check_ids(session.s, &r.p);
      if (st != G2S_OK) return report_error(out, st, session);
      return write_text(out, json::parse(r.str()).dump(2));
    }
    int failed = 0;
    st = g2s_verify(session.s, check.c_str(), &r.p, &failed);
    if (st != G2S_OK) return report_error(out, st, session);
    json report = json::parse(r.str());
    std::cerr << "overall: " << report["overall"].get<std::string>() << "\n";
    for (const auto& d : report["discrepancies"]) std::cerr << "  discrepancy: " << d.get<std::string>() << "\n";
    if (out.csv) {
      std::string csv = "id,status,runtime_ms\n";
      for (const auto& c : report["checks"]) {
        csv += c["id"].get<std::string>() + "," + c["status"].get<std::string>() + "," + c["runtime_ms"].dump() + "\n";
      }
      int rc = write_text(out, csv);
      return rc != kExitOk ? rc : (failed ? kExitFailure : kExitOk);
    }
    int rc = write_text(out, report.dump(2));
    return rc != kExitOk ? rc : (failed ? kExitFailure : kExitOk);
  }
  if (sa->parsed()) {
    OwnedString skipped;
    st = g2s_sample(session.s, sample_surface.c_str(), range1[0].c_str(), range1[1].c_str(), range1[2].c_str(),
                    range2[0].c_str(), range2[1].c_str(), range2[2].c_str(), &r.p, &skipped.p);
    if (st != G2S_OK) return report_error(out, st, session);
    json info = json::parse(skipped.str());
    std::cerr << "skipped " << info["skipped"].size() << " grid points\n";
    if (!skipped_path.empty()) {
      Output side{skipped_path, false, true};
      if (write_text(side, info.dump(2)) != kExitOk) return kExitFailure;
    }
    if (out.json_flag) {
      // Rows as JSON objects.
      json rows = json::array();
      std::istringstream in(r.str());
      std::string line;
      std::getline(in, line);
      while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
        if (cells.size() == 5) {
          rows.push_back({{"i1", std::stod(cells[0])},
                          {"i2", std::stod(cells[1])},
                          {"i3", std::stod(cells[2])},
                          {"param1", cells[3]},
                          {"param2", cells[4]}});
        }
      }
      return write_text(out, json{{"rows", rows}, {"skipped", info["skipped"]}}.dump(2));
    }
    return write_text(out, r.str());
  }
  if (po->parsed()) {
    g2s_poly* p = nullptr;
    if (!poly_name.empty()) {
      st = g2s_poly_from_catalog(session.s, poly_name.c_str(), &p);
    } else if (!poly_file.empty()) {
      std::stringstream buf;
      if (poly_file == "-") {
        buf << std::cin.rdbuf();
      } else {
        std::ifstream f(poly_file);
        if (!f) {
          write_text(out, json{{"error", {{"status", "io_error"}, {"message", "cannot read " + poly_file}}}}.dump());
          return kExitFailure;
        }
        buf << f.rdbuf();
      }
      st = g2s_poly_parse(session.s, buf.str().c_str(), &p);
    } else {
      std::cerr << "poly needs --name or --in\n";
      return kExitUsage;
    }
    if (st != G2S_OK) return report_error(out, st, session);
    std::unique_ptr<g2s_poly, void (*)(g2s_poly*)> guard(p, g2s_poly_free);
    OwnedString inf;
    st = g2s_poly_to_text(session.s, p, &r.p);
    if (st == G2S_OK) st = g2s_poly_to_infix(session.s, p, &inf.p);
    if (st != G2S_OK) return report_error(out, st, session);
    return write_text(out, json{{"text", r.str()}, {"infix", inf.str()}}.dump(2));
  }
  return kExitUsage;
}
