#pragma once

// Report serialization: a deterministic JSON document and a plain-text table.

#include <cstdio>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "paraverify/report.hpp"

namespace paraverify {

inline nlohmann::ordered_json report_to_json(const VerificationReport& rep, const VerifyConfig& cfg) {
  nlohmann::ordered_json out;
  out["scenario"] = rep.scenario();
  out["config"] = {{"samples", cfg.samples}, {"tol", cfg.tol}, {"seed", cfg.seed}};
  out["passed"] = rep.passed();
  out["failures"] = rep.failures();
  out["errors"] = rep.errors();
  auto& checks = out["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks()) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["anchor"] = c.anchor;
    if (std::isfinite(c.max_residual)) j["max_residual"] = c.max_residual;
    else j["max_residual"] = nullptr;
    j["tolerance"] = c.tolerance;
    j["samples"] = c.samples;
    j["expect"] = to_string(c.expect);
    j["status"] = to_string(c.status);
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  auto& verdicts = out["verdicts"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : rep.verdicts()) verdicts[k] = v;
  out["notes"] = rep.notes();
  return out;
}

inline std::string report_to_text(const VerificationReport& rep) {
  std::size_t width = 5;
  for (const auto& c : rep.checks()) width = std::max(width, c.id.size());
  std::ostringstream os;
  os << "scenario " << rep.scenario() << "\n";
  char line[512];
  std::snprintf(line, sizeof line, "%-*s  %-6s %-5s %12s %10s %7s\n", static_cast<int>(width), "check", "status",
                "cmp", "residual", "tol", "samples");
  os << line;
  for (const auto& c : rep.checks()) {
    const char* cmp = c.expect == Expect::below ? "<" : c.expect == Expect::above ? ">" : "";
    std::snprintf(line, sizeof line, "%-*s  %-6s %-5s %12.3e %10.1e %7d", static_cast<int>(width), c.id.c_str(),
                  to_string(c.status), cmp, c.max_residual, c.tolerance, c.samples);
    os << line;
    if (!c.note.empty()) os << "  " << c.note;
    os << "\n";
  }
  for (const auto& [k, v] : rep.verdicts()) os << "verdict " << k << " = " << v << "\n";
  for (const auto& n : rep.notes()) os << "note: " << n << "\n";
  os << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.failures() << " failed, " << rep.errors() << " errors, "
     << rep.checks().size() << " checks)\n";
  return os.str();
}

}  // namespace paraverify
