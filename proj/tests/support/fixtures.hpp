#pragma once

#include <map>
#include <string>

#include "hsurf_app/fixtures.hpp"

namespace testing_support {

// Certified fixtures are cached per (spec, seed); generation runs the full
// nodal certification.
inline const hsurf::app::Fixture& fixture(const std::string& spec, std::uint64_t seed = 1) {
  static std::map<std::pair<std::string, std::uint64_t>, hsurf::app::Fixture> cache;
  auto key = std::make_pair(spec, seed);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, hsurf::app::make_fixture(hsurf::app::FixtureSpec::parse(spec, seed), hsurf::FieldConfig{})).first;
  }
  return it->second;
}

}  // namespace testing_support
