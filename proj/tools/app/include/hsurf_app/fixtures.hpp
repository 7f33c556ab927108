#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hsurf/field.hpp"
#include "hsurf/nodal.hpp"
#include "hsurf/polynomial.hpp"

namespace hsurf::app {

struct FixtureSpec {
  enum class Kind { Fermat, OneNode, MultiNode, FromFile };

  Kind kind = Kind::Fermat;
  int n = 3;
  int d = 4;
  int nodes = 0;  // multi_node only
  std::uint64_t seed = 0;
  std::string path;         // from_file
  std::string points_path;  // from_file, optional

  // "fermat:N:D", "one_node:N:D", "multi_node:N:D:M", "file:PATH[:POINTS]"
  static FixtureSpec parse(const std::string& text, std::uint64_t seed);
  std::string to_string() const;
};

struct Fixture {
  FixtureSpec spec;
  RationalPolynomial f;
  std::vector<ProjectivePoint> points;  // declared nodes
  int attempts = 1;                     // generator draws until certified
  std::shared_ptr<Session> session;     // the certifying session, if any
};

/// Builds the fixture; random kinds retry, on one seeded stream, until
/// certify_nodal under `config` returns Nodal with the intended count.
Fixture make_fixture(const FixtureSpec& spec, const FieldConfig& config);

// Deterministic integer in [-bound, bound]; avoids the library-defined
// distributions so streams match across standard libraries.
inline long draw_coefficient(std::mt19937_64& rng, long bound) {
  return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
}

/// The point e_k = [0:...:1:...:0].
ProjectivePoint coordinate_point(int n, int k);

}  // namespace hsurf::app
