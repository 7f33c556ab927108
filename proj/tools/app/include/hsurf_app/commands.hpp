#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hsurf/field.hpp"
#include "hsurf/nodal.hpp"
#include "hsurf/session.hpp"
#include "hsurf_app/fixtures.hpp"
#include "hsurf_app/report.hpp"

namespace hsurf::app {

struct Options {
  FieldConfig field;
  std::optional<int> qmax;
  std::optional<int> kmax;
  std::uint64_t seed = 0;
  int threads = 1;
  bool allow_smooth = false;
};

/// Where the polynomial comes from: literal text, a file ("-" = stdin), or
/// a fixture spec. Points default to the fixture's declared nodes.
struct InputSpec {
  std::string poly;
  std::string input_path;
  std::string fixture;
  std::string points_path;
  std::optional<int> n;
};

struct Input {
  RationalPolynomial f;
  std::vector<ProjectivePoint> points;
  Json description;
  std::shared_ptr<Session> session;  // reused when its field config matches
};

Input load_input(const InputSpec& spec, const Options& opts);
Input from_fixture(const Fixture& fx);

/// Runs `fn(ctx)` in every configured field and stamps the agreed
/// certificate with the session's field string.
template <class Fn>
Certificate certify_in(Session& s, const std::string& what, Fn&& fn) {
  auto c = s.run(what, std::forward<Fn>(fn));
  c.field = s.config().to_string();
  return c;
}

Json to_json(const NodalCertificate& c);

RunReport cmd_hilbert(const Input& in, const Options& opts);
RunReport cmd_phi_check(const Input& in, const Options& opts);
RunReport cmd_koszul(const Input& in, const Options& opts, std::optional<int> m_min, std::optional<int> m_max);
RunReport cmd_lemma23(const Input& in, const Options& opts);
RunReport cmd_hodge(const Input& in, const Options& opts);
RunReport cmd_period_diff(const Input& in, const Options& opts, const std::string& subspace_path);
RunReport cmd_certify(const Input& in, const Options& opts);
RunReport cmd_fixture(const FixtureSpec& spec, const Options& opts);

/// GRID is a comma list of fixture specs, each optionally followed by
/// "*COUNT"; fixture i of the sweep is drawn with seed opts.seed + i.
RunReport cmd_sweep(const std::string& grid, const Options& opts);

}  // namespace hsurf::app
