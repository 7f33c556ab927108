#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hsurf_app/commands.hpp"

using namespace hsurf;
using namespace hsurf::app;

namespace {

int emit(const RunReport& rep, bool json) {
  if (json) {
    std::cout << rep.to_json().dump(2) << "\n";
  } else {
    std::cout << rep.to_text();
  }
  return rep.exit_code;
}

RunReport input_error(const std::string& command, const Options& opts, const Error& e) {
  RunReport rep;
  rep.command = command;
  rep.fields = opts.field.field_names();
  rep.exit_code = kHypothesisOrInput;
  rep.reason = std::string(to_string(e.kind())) + ": " + e.what();
  return rep;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded invariants and certificates for nodal projective hypersurfaces"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string field_text = "fp:2147483629,fp:2147483587";
  std::optional<int> qmax, kmax;
  std::uint64_t seed = 0;
  int threads = 1;
  bool allow_smooth = false, json = false;
  app.add_option("--field", field_text, "fp:<p1>,fp:<p2> or exact")->capture_default_str();
  app.add_option("--qmax", qmax, "last degree of the mdr scan");
  app.add_option("--kmax", kmax, "last degree of the hilbert table");
  app.add_option("--seed", seed, "fixture seed")->capture_default_str();
  app.add_option("--threads", threads, "sweep workers")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_flag("--allow-smooth", allow_smooth, "run theorem checks on smooth inputs");
  app.add_flag("--json", json, "machine-readable report");

  InputSpec spec;
  auto add_input = [&](CLI::App* sub, bool with_points) {
    sub->add_option("poly", spec.poly, "polynomial text");
    sub->add_option("--input,-i", spec.input_path, "polynomial file, - for stdin");
    sub->add_option("--fixture", spec.fixture, "fermat:N:D | one_node:N:D | multi_node:N:D:M | file:PATH[:POINTS]");
    sub->add_option("-n", spec.n, "ambient dimension (default: highest variable index)");
    if (with_points) sub->add_option("--points,-p", spec.points_path, "node points, one per line");
  };

  auto* hilbert = app.add_subcommand("hilbert", "Milnor algebra dimensions against the smooth reference");
  add_input(hilbert, false);
  auto* certify = app.add_subcommand("certify", "certify the listed points as the nodes of f");
  add_input(certify, true);
  auto* phi = app.add_subcommand("phi-check", "injectivity of the multiplication map phi");
  add_input(phi, true);
  std::optional<int> m_min, m_max;
  auto* koszul = app.add_subcommand("koszul", "top Koszul cohomology and the ct/mdr identity");
  add_input(koszul, true);
  koszul->add_option("--m-min", m_min, "first m (default 0)");
  koszul->add_option("--m-max", m_max, "last m (default floor((nd-1)/2))");
  auto* lemma23 = app.add_subcommand("lemma23", "kernels of multiplication by the variables");
  add_input(lemma23, true);
  auto* hodge = app.add_subcommand("hodge", "Hodge-graded dimensions");
  add_input(hodge, true);
  std::string subspace;
  auto* period = app.add_subcommand("period-diff", "injectivity of the period differential");
  add_input(period, true);
  period->add_option("--subspace", subspace, "deformation directions, one degree-d polynomial per line");

  std::string fixture_text, out_poly, out_points;
  auto* fixture = app.add_subcommand("fixture", "generate a certified fixture");
  fixture->add_option("spec", fixture_text, "fermat:N:D | one_node:N:D | multi_node:N:D:M")->required();
  fixture->add_option("--out-poly", out_poly, "write the polynomial here");
  fixture->add_option("--out-points", out_points, "write the node points here");
  std::string grid;
  auto* sweep = app.add_subcommand("sweep", "run hodge and phi over generated fixtures");
  sweep->add_option("grid", grid, "comma list of fixture specs, each optionally *COUNT")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kHypothesisOrInput;
  }

  Options opts;
  opts.qmax = qmax;
  opts.kmax = kmax;
  opts.seed = seed;
  opts.threads = threads;
  opts.allow_smooth = allow_smooth;
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    opts.field = FieldConfig::parse(field_text);
  } catch (const Error& e) {
    return emit(input_error(command, opts, e), json);
  }

  if (command == "fixture") {
    try {
      const auto fs = FixtureSpec::parse(fixture_text, seed);
      auto rep = cmd_fixture(fs, opts);
      if (rep.exit_code == kPass && (!out_poly.empty() || !out_points.empty())) {
        const auto fx = make_fixture(fs, opts.field);
        if (!out_poly.empty()) write_file(out_poly, fx.f.to_string() + "\n");
        if (!out_points.empty()) {
          std::string text;
          for (const auto& p : fx.points) text += p.to_string() + "\n";
          write_file(out_points, text);
        }
      }
      return emit(rep, json);
    } catch (const Error& e) {
      return emit(input_error(command, opts, e), json);
    }
  }
  if (command == "sweep") return emit(cmd_sweep(grid, opts), json);

  std::optional<Input> loaded;
  try {
    loaded = load_input(spec, opts);
  } catch (const Error& e) {
    return emit(input_error(command, opts, e), json);
  }
  const Input& in = *loaded;
  if (command == "hilbert") return emit(cmd_hilbert(in, opts), json);
  if (command == "certify") return emit(cmd_certify(in, opts), json);
  if (command == "phi-check") return emit(cmd_phi_check(in, opts), json);
  if (command == "koszul") return emit(cmd_koszul(in, opts, m_min, m_max), json);
  if (command == "lemma23") return emit(cmd_lemma23(in, opts), json);
  if (command == "hodge") return emit(cmd_hodge(in, opts), json);
  if (command == "period-diff") return emit(cmd_period_diff(in, opts, subspace), json);
  return kHypothesisOrInput;
}
