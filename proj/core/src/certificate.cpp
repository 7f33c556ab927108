#include "hsurf/certificate.hpp"

namespace hsurf {

Certificate& Certificate::input(std::string key, std::string value) {
  inputs.emplace_back(std::move(key), std::move(value));
  return *this;
}

Certificate& Certificate::set(std::string key, std::int64_t value) {
  for (auto& [k, v] : quantities) {
    if (k == key) {
      v = value;
      return *this;
    }
  }
  quantities.emplace_back(std::move(key), value);
  return *this;
}

Certificate& Certificate::note(std::string text) {
  notes.push_back(std::move(text));
  return *this;
}

std::optional<std::int64_t> Certificate::quantity(const std::string& key) const {
  for (const auto& [k, v] : quantities) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string summary(const Certificate& c) {
  std::string out = c.claim + ": " + (c.pass ? "PASS" : "FAIL");
  if (!c.quantities.empty()) {
    out += " (";
    for (std::size_t i = 0; i < c.quantities.size(); ++i) {
      if (i) out += ", ";
      out += c.quantities[i].first + "=" + std::to_string(c.quantities[i].second);
    }
    out += ")";
  }
  return out;
}

}  // namespace hsurf
