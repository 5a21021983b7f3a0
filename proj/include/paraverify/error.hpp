#pragma once

#include <stdexcept>
#include <string>

namespace paraverify {

enum class ErrorKind {
  parse,
  domain,
  degenerate_metric,
  signature_mismatch,
  rank_deficient,
  lightlike_tangent,
  degenerate_normal_frame,
  degenerate_distribution,
  ill_conditioned,
  inapplicable,
  unsupported,
  schema,
  config,
  unknown_scenario,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::domain: return "domain";
    case ErrorKind::degenerate_metric: return "degenerate_metric";
    case ErrorKind::signature_mismatch: return "signature_mismatch";
    case ErrorKind::rank_deficient: return "rank_deficient";
    case ErrorKind::lightlike_tangent: return "lightlike_tangent";
    case ErrorKind::degenerate_normal_frame: return "degenerate_normal_frame";
    case ErrorKind::degenerate_distribution: return "degenerate_distribution";
    case ErrorKind::ill_conditioned: return "ill_conditioned";
    case ErrorKind::inapplicable: return "inapplicable";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::schema: return "schema";
    case ErrorKind::config: return "config";
    case ErrorKind::unknown_scenario: return "unknown_scenario";
  }
  return "unknown";
}

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit code or a failed report entry.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace paraverify
