#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hsurf {

/// Verdict of one theorem check: what was claimed, on which input, the
/// integers it was decided on, and the outcome.
struct Certificate {
  std::string claim;
  std::string field;  // FieldConfig::to_string() of the session, filled by the caller
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::int64_t>> quantities;
  std::vector<std::string> notes;

  Certificate() = default;
  explicit Certificate(std::string c) : claim(std::move(c)) {}

  Certificate& input(std::string key, std::string value);
  Certificate& set(std::string key, std::int64_t value);
  Certificate& note(std::string text);

  std::optional<std::int64_t> quantity(const std::string& key) const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// One-line human summary: "claim: PASS (k=v, ...)".
std::string summary(const Certificate& c);

}  // namespace hsurf
