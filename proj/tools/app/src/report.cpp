#include "hsurf_app/report.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

namespace hsurf::app {

void RunReport::settle() {
  if (exit_code == kHypothesisOrInput) return;
  for (const auto& c : certificates) {
    if (!c.pass) {
      exit_code = kClaimFailed;
      if (reason.empty()) reason = c.claim + " failed";
    }
  }
}

Json to_json(const Certificate& c) {
  Json j;
  j["claim"] = c.claim;
  j["field"] = c.field;
  j["pass"] = c.pass;
  Json inputs = Json::object();
  for (const auto& [k, v] : c.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  Json q = Json::object();
  for (const auto& [k, v] : c.quantities) q[k] = v;
  j["quantities"] = q;
  j["notes"] = c.notes;
  return j;
}

Json RunReport::to_json(bool with_timings) const {
  Json j;
  j["schema"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["fields"] = fields;
  j["input"] = input;
  j["results"] = results;
  Json certs = Json::array();
  for (const auto& c : certificates) certs.push_back(hsurf::app::to_json(c));
  j["certificates"] = certs;
  j["exit_code"] = exit_code;
  j["reason"] = reason;
  if (with_timings) j["timings"] = timings;
  return j;
}

namespace {

void write_value(std::ostringstream& out, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) write_value(out, it.key(), it.value(), indent + 2);
  } else if (v.is_array() && !v.empty() && v.front().is_object()) {
    // table: header from the first row's keys
    out << pad << key << ":\n" << pad << " ";
    for (auto it = v.front().begin(); it != v.front().end(); ++it) out << " " << it.key();
    out << "\n";
    for (const auto& row : v) {
      out << pad << " ";
      for (auto it = row.begin(); it != row.end(); ++it) {
        out << " " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
      }
      out << "\n";
    }
  } else {
    out << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

std::string RunReport::to_text() const {
  std::ostringstream out;
  out << "hsurf " << kToolVersion << " " << command << "\n";
  out << "fields: ";
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
  out << "\n";
  for (auto it = input.begin(); it != input.end(); ++it) write_value(out, it.key(), it.value(), 0);
  for (auto it = results.begin(); it != results.end(); ++it) write_value(out, it.key(), it.value(), 0);
  for (const auto& c : certificates) {
    out << summary(c) << "\n";
    for (const auto& n : c.notes) out << "  note: " << n << "\n";
  }
  out << "exit: " << exit_code;
  if (!reason.empty()) out << " (" << reason << ")";
  out << "\n";
  return out.str();
}

std::string text_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hsurf::app
