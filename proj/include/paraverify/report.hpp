#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "paraverify/error.hpp"

namespace paraverify {

struct VerifyConfig {
  int samples = 100;
  double tol = 1e-8;
  std::uint64_t seed = 42;

  void validate() const {
    if (samples < 1) throw Error(ErrorKind::config, "samples must be >= 1");
    if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(ErrorKind::config, "tol must be positive");
  }
};

/// below: residual must stay under the tolerance.
/// above: residual must exceed it (discrimination checks).
/// info:  recorded, never affects the overall verdict.
enum class Expect { below, above, info };
enum class Status { pass, fail, info };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::info: return "info";
  }
  return "?";
}

inline const char* to_string(Expect e) {
  switch (e) {
    case Expect::below: return "below";
    case Expect::above: return "above";
    case Expect::info: return "info";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  std::string anchor;
  double max_residual = 0.0;
  double tolerance = 0.0;
  int samples = 0;
  Expect expect = Expect::below;
  Status status = Status::pass;
  std::string note;
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string scenario) : scenario_(std::move(scenario)) {}

  const std::string& scenario() const { return scenario_; }
  void set_scenario(std::string s) { scenario_ = std::move(s); }

  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }
  const std::vector<std::pair<std::string, std::string>>& verdicts() const { return verdicts_; }

  CheckResult& add(std::string id, std::string anchor, double residual, double tol, int samples,
                   Expect expect, std::string note = {}) {
    CheckResult c;
    c.id = std::move(id);
    c.anchor = std::move(anchor);
    c.max_residual = residual;
    c.tolerance = tol;
    c.samples = samples;
    c.expect = expect;
    c.note = std::move(note);
    const bool finite = std::isfinite(residual);
    switch (expect) {
      case Expect::below: c.status = finite && residual < tol ? Status::pass : Status::fail; break;
      case Expect::above: c.status = finite && residual > tol ? Status::pass : Status::fail; break;
      case Expect::info: c.status = Status::info; break;
    }
    checks_.push_back(std::move(c));
    return checks_.back();
  }

  CheckResult& below(std::string id, std::string anchor, double residual, double tol, int samples,
                     std::string note = {}) {
    return add(std::move(id), std::move(anchor), residual, tol, samples, Expect::below, std::move(note));
  }
  CheckResult& above(std::string id, std::string anchor, double residual, double threshold,
                     int samples, std::string note = {}) {
    return add(std::move(id), std::move(anchor), residual, threshold, samples, Expect::above,
               std::move(note));
  }
  CheckResult& info(std::string id, std::string anchor, double value, int samples,
                    std::string note = {}) {
    return add(std::move(id), std::move(anchor), value, 0.0, samples, Expect::info, std::move(note));
  }

  /// A check that could not be evaluated (degenerate frame, domain error...).
  CheckResult& error(std::string id, std::string anchor, const std::string& diagnostic) {
    CheckResult& c = add(std::move(id), std::move(anchor), NAN, 0.0, 0, Expect::below, diagnostic);
    c.status = Status::fail;
    ++errors_;
    return c;
  }

  void note(std::string n) { notes_.push_back(std::move(n)); }

  void verdict(std::string key, std::string value) {
    for (auto& [k, v] : verdicts_)
      if (k == key) {
        v = std::move(value);
        return;
      }
    verdicts_.emplace_back(std::move(key), std::move(value));
  }

  const std::string* find_verdict(const std::string& key) const {
    for (const auto& [k, v] : verdicts_)
      if (k == key) return &v;
    return nullptr;
  }

  const CheckResult* find(const std::string& id) const {
    for (const auto& c : checks_)
      if (c.id == id) return &c;
    return nullptr;
  }

  /// Appends another report's checks (ids optionally prefixed), notes and,
  /// unless told otherwise, verdicts.
  void append(const VerificationReport& other, const std::string& prefix = {}, bool with_verdicts = true) {
    for (auto c : other.checks_) {
      if (!prefix.empty()) c.id = prefix + "." + c.id;
      checks_.push_back(std::move(c));
    }
    for (const auto& n : other.notes_) notes_.push_back(n);
    if (with_verdicts)
      for (const auto& [k, v] : other.verdicts_) verdict(k, v);
    errors_ += other.errors_;
  }

  /// Number of checks that could not be evaluated.
  int errors() const { return errors_; }

  /// Overall pass iff every non-informational check passes.
  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(),
                       [](const CheckResult& c) { return c.status != Status::fail; });
  }

  int failures() const {
    return static_cast<int>(std::count_if(checks_.begin(), checks_.end(),
                                          [](const CheckResult& c) { return c.status == Status::fail; }));
  }

 private:
  std::string scenario_;
  std::vector<CheckResult> checks_;
  std::vector<std::string> notes_;
  std::vector<std::pair<std::string, std::string>> verdicts_;
  int errors_ = 0;
};

/// Element-wise running maximum of per-sample residual vectors.
class MaxResiduals {
 public:
  explicit MaxResiduals(std::size_t n) : m_(n, 0.0) {}

  void merge(const std::vector<double>& r) {
    for (std::size_t i = 0; i < m_.size() && i < r.size(); ++i) {
      if (std::isnan(r[i])) m_[i] = NAN;
      else if (!std::isnan(m_[i])) m_[i] = std::max(m_[i], r[i]);
    }
  }

  double operator[](std::size_t i) const { return m_[i]; }

 private:
  std::vector<double> m_;
};

}  // namespace paraverify
