#pragma once

#include <string>
#include <vector>

#include "hsurf/certificate.hpp"
#include "json.hpp"

namespace hsurf::app {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "hsurf-report/1";

enum ExitCode : int { kPass = 0, kClaimFailed = 1, kHypothesisOrInput = 2 };

/// Everything one command run produced. `timings` is the only part allowed
/// to differ between replays of the same inputs.
struct RunReport {
  std::string command;
  std::vector<std::string> fields;
  Json input = Json::object();
  Json results = Json::object();
  std::vector<Certificate> certificates;
  int exit_code = kPass;
  std::string reason;  // why exit_code != 0
  Json timings = Json::object();

  void add(Certificate c) { certificates.push_back(std::move(c)); }

  // exit 1 if any certificate failed, unless a hypothesis error already set 2
  void settle();

  Json to_json(bool with_timings = true) const;
  std::string to_text() const;
};

Json to_json(const Certificate& c);

/// FNV-1a of the canonical polynomial text, as 16 hex digits.
std::string text_hash(const std::string& text);

}  // namespace hsurf::app
