#include "g2split/suite.hpp"

#include "g2split/singular.hpp"
#include "g2split/surfaces.hpp"

#include <chrono>

namespace g2split {

using nlohmann::json;

std::vector<std::string> suite_ids() {
  std::vector<std::string> ids = identity_ids();
  for (const char* id : {"singular_point_exactness", "exceptional_table", "t3_points", "minors_on_iso1", "c3_system"}) {
    ids.emplace_back(id);
  }
  return ids;
}

json run_check(const std::string& id, const SuiteOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  json report;
  std::string method;
  if (id == "singular_point_exactness") {
    report = sample_c1_c2_singularity(opt.singular_samples, opt.precision, opt.seed);
    method = "exact gradient at the listed point, high-precision sampling along C1 and C2";
  } else if (id == "exceptional_table") {
    report = verify_exceptional_table();
    method = "exact evaluation in Q and Q(sqrt d) at the printed and the corrected points";
  } else if (id == "t3_points") {
    report = verify_t3_points();
    method = "exact evaluation of the r-system, rho, S2 and the C1/C2 classification";
  } else if (id == "minors_on_iso1") {
    report = verify_minors_on_iso1(opt.prime, opt.minor_samples, opt.seed);
    method = "Jacobian minors of theta at GF(p)-points on and off the iso1 curve";
  } else if (id == "c3_system") {
    report = verify_c3_system();
    method = "exact residuals of the C3 equations, the auxiliary relation and the cubic";
  } else {
    auto ids = identity_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
      std::string valid;
      for (const auto& v : suite_ids()) valid += (valid.empty() ? "" : ", ") + v;
      throw InvalidArgument("unknown check '" + id + "' (valid: all, " + valid + ")");
    }
    IdentityOptions io{opt.seed, id == "s2_oracle_membership" ? opt.oracle_samples : opt.samples, true};
    report = check_identity(id, io);
    method = report.at("method");
  }
  json out = {{"id", id},
              {"status", report.at("status")},
              {"method", method},
              {"runtime_ms",
               std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count()},
              {"discrepancies", report.value("discrepancies", json::array())}};
  report.erase("status");
  report.erase("discrepancies");
  out["details"] = report;
  return out;
}

json run_suite(const std::vector<std::string>& ids, const SuiteOptions& opt) {
  json checks = json::array(), discrepancies = json::array();
  bool failed = false;
  for (const auto& id : ids) {
    json c = run_check(id, opt);
    failed = failed || c.at("status") == "fail";
    for (const auto& d : c.at("discrepancies")) discrepancies.push_back(id + ": " + d.get<std::string>());
    checks.push_back(std::move(c));
  }
  std::string overall = failed ? "fail"
                        : discrepancies.empty() ? "pass"
                                                : "discrepancies(" + std::to_string(discrepancies.size()) + ")";
  return {{"checks", checks},
          {"overall", overall},
          {"discrepancy_count", discrepancies.size()},
          {"discrepancies", discrepancies}};
}

}  // namespace g2split
