#include "hsurf_app/commands.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

#include "hsurf/hodge.hpp"
#include "hsurf/koszul.hpp"
#include "hsurf/parse.hpp"
#include "hsurf/torelli.hpp"
#include "hsurf_app/io.hpp"

namespace hsurf::app {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Json describe(const RationalPolynomial& f, const std::vector<ProjectivePoint>& points) {
  Json j;
  const auto text = f.to_string();
  j["polynomial"] = text;
  j["hash"] = text_hash(text);
  j["n"] = f.n();
  j["d"] = f.degree();
  Json pts = Json::array();
  for (const auto& p : points) pts.push_back(p.to_string());
  j["points"] = pts;
  return j;
}

Session& session_for(const Input& in, const Options& opts, std::unique_ptr<Session>& owned) {
  if (in.session && in.session->config() == opts.field) return *in.session;
  owned = std::make_unique<Session>(in.f, opts.field);
  return *owned;
}

// Library errors become exit code 2 with the error kind as the reason.
template <class Fn>
RunReport guarded(const std::string& command, const Options& opts, Fn&& fn) {
  RunReport rep;
  rep.command = command;
  rep.fields = opts.field.field_names();
  const auto t0 = Clock::now();
  try {
    fn(rep);
    rep.settle();
  } catch (const Error& e) {
    rep.exit_code = kHypothesisOrInput;
    rep.reason = std::string(to_string(e.kind())) + ": " + e.what();
  }
  rep.timings["total_seconds"] = seconds_since(t0);
  return rep;
}

// Certifies nodality; false (with exit 2 recorded) when the theorem checks
// must not run.
bool nodal_gate(Session& s, const Input& in, const Options& opts, RunReport& rep, NodalCertificate& cert) {
  cert = certify_nodal(s, in.points);
  rep.results["nodal"] = to_json(cert);
  if (cert.nodal()) return true;
  if (cert.verdict == NodalCertificate::Verdict::Smooth && opts.allow_smooth) return true;
  rep.exit_code = kHypothesisOrInput;
  rep.reason = cert.verdict == NodalCertificate::Verdict::Smooth ? "input is smooth; pass --allow-smooth to run anyway"
                                                                 : "nodality not certified: " + cert.reason;
  return false;
}

KoszulOptions koszul_options(const Options& opts) {
  KoszulOptions k;
  // Exact elimination on the big trivial-syzygy matrices is out of reach.
  if (opts.field.mode == FieldConfig::Mode::Exact) k.direct_budget = 2'000'000;
  return k;
}

template <class Ctx>
using FieldOf = std::decay_t<decltype(std::declval<Ctx&>().field())>;

}  // namespace

Json to_json(const NodalCertificate& c) {
  Json j;
  j["verdict"] = c.verdict_string();
  if (c.tjurina) {
    j["tjurina"] = *c.tjurina;
  } else {
    j["tjurina"] = nullptr;
  }
  Json pts = Json::array();
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    Json p;
    p["point"] = c.points[i].to_string();
    p["singular"] = c.per_point[i].singular;
    p["hessian_rank"] = c.per_point[i].hessian_rank;
    pts.push_back(p);
  }
  j["points"] = pts;
  return j;
}

Input load_input(const InputSpec& spec, const Options& opts) {
  const int sources = !spec.poly.empty() + !spec.input_path.empty() + !spec.fixture.empty();
  if (sources != 1) throw Error(ErrorKind::InvalidArgument, "give exactly one of a polynomial, --input or --fixture");
  if (!spec.fixture.empty()) {
    auto in = from_fixture(make_fixture(FixtureSpec::parse(spec.fixture, opts.seed), opts.field));
    if (!spec.points_path.empty()) {
      in.points = read_points(spec.points_path, in.f.n());
      in.description["points"] = describe(in.f, in.points)["points"];
    }
    return in;
  }
  const std::string text = spec.poly.empty() ? read_polynomial_text(spec.input_path) : spec.poly;
  const int n = spec.n.value_or(infer_ambient_dimension(text));
  Input in{parse_polynomial(text, n), {}, Json::object(), nullptr};
  if (!spec.points_path.empty()) in.points = read_points(spec.points_path, n);
  in.description = describe(in.f, in.points);
  in.description["source"] = spec.poly.empty() ? "file:" + spec.input_path : "literal";
  return in;
}

Input from_fixture(const Fixture& fx) {
  Input in{fx.f, fx.points, describe(fx.f, fx.points), fx.session};
  in.description["source"] = "fixture:" + fx.spec.to_string();
  in.description["seed"] = fx.spec.seed;
  in.description["attempts"] = fx.attempts;
  return in;
}

RunReport cmd_hilbert(const Input& in, const Options& opts) {
  return guarded("hilbert", opts, [&](RunReport& rep) {
    rep.input = in.description;
    std::unique_ptr<Session> owned;
    Session& s = session_for(in, opts, owned);
    const int n = s.n(), d = s.d();
    const int kmax = opts.kmax.value_or((n + 1) * (d - 2) + 2);
    if (kmax < 0) throw Error(ErrorKind::InvalidArgument, "--kmax must be >= 0");
    const auto profile = s.run("hilbert", [&](auto& ctx) { return hilbert_profile(ctx, kmax); });
    Json rows = Json::array();
    for (const auto& [k, q] : profile.dims) {
      Json r;
      r["k"] = k;
      r["milnor_dim"] = q;
      r["smooth_reference"] = smooth_reference_dim(n, d, k);
      rows.push_back(r);
    }
    rep.results["hilbert"] = rows;
    const auto ct = s.run("ct", [](auto& ctx) { return coincidence_threshold(ctx); });
    rep.results["ct"] = ct ? Json(*ct) : Json("smooth");
    try {
      rep.results["tjurina"] = s.run("tjurina", [](auto& ctx) { return tjurina_count(ctx); });
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoStabilization) throw;
      rep.results["tjurina"] = "not stabilized";
    }
  });
}

RunReport cmd_certify(const Input& in, const Options& opts) {
  return guarded("certify", opts, [&](RunReport& rep) {
    rep.input = in.description;
    std::unique_ptr<Session> owned;
    Session& s = session_for(in, opts, owned);
    const auto cert = certify_nodal(s, in.points);
    rep.results["nodal"] = to_json(cert);
    if (cert.verdict == NodalCertificate::Verdict::Failed) {
      rep.exit_code = kHypothesisOrInput;
      rep.reason = cert.reason;
    }
  });
}

RunReport cmd_phi_check(const Input& in, const Options& opts) {
  return guarded("phi-check", opts, [&](RunReport& rep) {
    rep.input = in.description;
    std::unique_ptr<Session> owned;
    Session& s = session_for(in, opts, owned);
    NodalCertificate nodal;
    if (!nodal_gate(s, in, opts, rep, nodal)) return;
    auto c = certify_in(s, "phi", [](auto& ctx) { return phi_injective(ctx); });
    c.note("nodal verdict: " + nodal.verdict_string());
    rep.add(std::move(c));
  });
}

RunReport cmd_koszul(const Input& in, const Options& opts, std::optional<int> m_min, std::optional<int> m_max) {
  return guarded("koszul", opts, [&](RunReport& rep) {
    rep.input = in.description;
    std::unique_ptr<Session> owned;
    Session& s = session_for(in, opts, owned);
    NodalCertificate nodal;
    if (!nodal_gate(s, in, opts, rep, nodal)) return;
    const int n = s.n(), d = s.d();
    const int vanish = (n * d - 1) / 2;  // integer m <= (nd-1)/2
    const int lo = m_min.value_or(0);
    const int hi = m_max.value_or(vanish);
    const auto kopts = koszul_options(opts);
    rep.results["koszul_direct_budget"] = kopts.direct_budget;
    std::vector<KoszulValue> values;
    for (int m = lo; m <= hi; ++m) {
      values.push_back(s.run("koszul", [&](auto& ctx) { return koszul_hn(ctx, m, kopts); }));
    }
    Json rows = Json::array();
    bool zero = true;
    int checked = -1;
    for (int m = lo; m <= hi; ++m) {
      const auto& v = values[static_cast<std::size_t>(m - lo)];
      Json r;
      r["m"] = m;
      r["hn_dim"] = v.dim;
      r["route"] = std::string(to_string(v.route));
      rows.push_back(r);
      if (m <= vanish) {
        zero = zero && v.dim == 0;
        checked = m;
      }
    }
    rep.results["koszul"] = rows;
    if (n >= 3 && d > 2 && nodal.nodal() && checked >= 0) {
      Certificate c("koszul_vanishing");
      c.field = opts.field.to_string();
      c.set("n", n).set("d", d).set("m_max_checked", checked);
      c.pass = zero;
      rep.add(std::move(c));
    }

    const auto md = s.run("mdr", [&](auto& ctx) { return mdr(ctx, opts.qmax, kopts); });
    const auto ct = s.run("ct", [](auto& ctx) { return coincidence_threshold(ctx); });
    rep.results["mdr"] = md.value ? Json(*md.value) : Json("smooth");
    rep.results["ct"] = ct ? Json(*ct) : Json("smooth");
    rep.results["qmax"] = md.q_max;
    if (ct && md.value) {
      Certificate c("ct_mdr_identity");
      c.field = opts.field.to_string();
      c.set("ct", *ct).set("mdr", *md.value).set("d", d).set("lower_bound", 2 * d - n - 1);
      c.pass = *ct == *md.value + d - 2 && *ct > 2 * d - n - 1;
      for (std::size_t q = 0; q < md.routes.size(); ++q) {
        if (md.routes[q] == KoszulRoute::Euler) {
          c.note("H^n dims for q >= " + std::to_string(q) +
                 " came from the Euler identity, so the identity is not checked independently there");
          break;
        }
      }
      rep.add(std::move(c));
    }
  });
}

RunReport cmd_lemma23(const Input& in, const Options& opts) {
  return guarded("lemma23", opts, [&](RunReport& rep) {
    rep.input = in.description;
    std::unique_ptr<Session> owned;
    Session& s = session_for(in, opts, owned);
    NodalCertificate nodal;
    if (!nodal_gate(s, in, opts, rep, nodal)) return;
    const int top = 2 * s.d() - s.n() - 2;
    const auto dims = s.run("lemma23", [&](auto& ctx) {
      std::vector<std::size_t> out;
      for (int t = 0; t <= top; ++t) out.push_back(variable_multiplication_kernel(ctx, t).dim());
      return out;
    });
    Json rows = Json::array();
    bool zero = true;
    for (int t = 0; t <= top; ++t) {
      Json r;
      r["t"] = t;
      r["kernel_dim"] = dims[static_cast<std::size_t>(t)];
      rows.push_back(r);
      zero = zero && dims[static_cast<std::size_t>(t)] == 0;
    }
    rep.results["kernels"] = rows;
    Certificate c("variable_kernel_vanishing");
    c.field = opts.field.to_string();
    c.set("n", s.n()).set("d", s.d()).set("t_max", top);
    c.pass = zero;
    rep.add(std::move(c));
  });
}

RunReport cmd_hodge(const Input& in, const Options& opts) {
  return guarded("hodge", opts, [&](RunReport& rep) {
    rep.input = in.description;
    std::unique_ptr<Session> owned;
    Session& s = session_for(in, opts, owned);
    NodalCertificate nodal;
    if (!nodal_gate(s, in, opts, rep, nodal)) return;
    const int n = s.n(), d = s.d();
    std::optional<std::size_t> nodes;
    if (nodal.nodal()) nodes = nodal.nodes;
    if (nodal.verdict == NodalCertificate::Verdict::Smooth) nodes = 0;
    const auto h = s.run("hodge", [&](auto& ctx) { return hodge_graded_dims(ctx, nodes); });
    Json j;
    j["gr_top"] = h.gr_top;
    j["gr_next"] = h.gr_next ? Json(*h.gr_next) : Json(nullptr);
    if (!h.gr_next_note.empty()) j["gr_next_note"] = h.gr_next_note;
    j["node_count"] = nodes ? Json(*nodes) : Json(nullptr);
    rep.results["hodge"] = j;

    Certificate ref("hodge_reference");
    ref.field = opts.field.to_string();
    ref.set("gr_top", static_cast<std::int64_t>(h.gr_top));
    ref.set("reference_top", static_cast<std::int64_t>(smooth_reference_dim(n, d, d - n - 1)));
    ref.pass = h.gr_top == smooth_reference_dim(n, d, d - n - 1);
    if (n > 4 && h.gr_next) {
      ref.set("gr_next", static_cast<std::int64_t>(*h.gr_next));
      ref.set("reference_next", static_cast<std::int64_t>(smooth_reference_dim(n, d, 2 * d - n - 1)));
      ref.pass = ref.pass && *h.gr_next == smooth_reference_dim(n, d, 2 * d - n - 1);
    }
    rep.add(std::move(ref));

    if (n == 3) {
      const int k = 2 * d - 4;
      const auto sat = s.run("saturation", [&](auto& ctx) { return ctx.jacobian_dim(k) + saturation_excess(ctx, k); });
      std::vector<std::vector<mpq_class>> pts;
      for (const auto& p : in.points) pts.push_back(p.coords);
      const auto ideal = ideal_of_points_dim(pts, n, k);
      Certificate c("saturation_matches_nodes");
      c.field = opts.field.to_string();
      c.set("k", k).set("saturation_dim", static_cast<std::int64_t>(sat)).set("ideal_of_points_dim", static_cast<std::int64_t>(ideal));
      c.pass = sat == ideal;
      rep.add(std::move(c));
    }
  });
}

RunReport cmd_period_diff(const Input& in, const Options& opts, const std::string& subspace_path) {
  return guarded("period-diff", opts, [&](RunReport& rep) {
    rep.input = in.description;
    std::unique_ptr<Session> owned;
    Session& s = session_for(in, opts, owned);
    if (!period_dimension_supported(s.n())) {
      throw Error(ErrorKind::UnsupportedDimension, "period differential is not certified for n=" + std::to_string(s.n()));
    }
    NodalCertificate nodal;
    if (!nodal_gate(s, in, opts, rep, nodal)) return;
    std::vector<RationalPolynomial> directions;
    if (!subspace_path.empty()) directions = read_polynomial_lines(subspace_path, s.n());
    rep.results["subspace"] = subspace_path.empty() ? Json("standard complement of J(f)_d") : Json(subspace_path);

    struct Outcome {
      Certificate period;
      std::optional<Certificate> sign;
      bool operator==(const Outcome&) const = default;
    };
    const auto out = s.run("period", [&](auto& ctx) {
      using F = FieldOf<decltype(ctx)>;
      DeformationSubspace<F> v;
      if (directions.empty()) {
        v = standard_complement(ctx);
      } else {
        for (const auto& h : directions) v.basis.push_back(h.convert(ctx.field()));
      }
      auto pd = period_differential(ctx, v);
      Outcome o{pd.certificate, std::nullopt};
      if (directions.empty()) {
        // Same columns as phi, so every entry must be the negated phi entry.
        const auto phi = phi_matrix(ctx);
        Certificate c("period_phi_sign");
        bool same = phi.rank == pd.rank && phi.matrix.columns().size() == pd.matrix.columns().size();
        for (std::size_t j = 0; same && j < phi.matrix.columns().size(); ++j) {
          const auto& a = phi.matrix.columns()[j];
          const auto& b = pd.matrix.columns()[j];
          same = a.index == b.index;
          for (std::size_t t = 0; same && t < a.nnz(); ++t) same = b.value[t] == ctx.field().neg(a.value[t]);
        }
        c.set("phi_rank", static_cast<std::int64_t>(phi.rank)).set("period_rank", static_cast<std::int64_t>(pd.rank));
        c.pass = same;
        o.sign = c;
      }
      return o;
    });
    auto period = out.period;
    period.field = opts.field.to_string();
    rep.add(std::move(period));
    if (out.sign) {
      auto c = *out.sign;
      c.field = opts.field.to_string();
      rep.add(std::move(c));
    }
  });
}

RunReport cmd_fixture(const FixtureSpec& spec, const Options& opts) {
  return guarded("fixture", opts, [&](RunReport& rep) {
    const auto fx = make_fixture(spec, opts.field);
    const auto in = from_fixture(fx);
    rep.input = in.description;
    if (fx.session) rep.results["nodal"] = to_json(certify_nodal(*fx.session, fx.points));
  });
}

namespace {

struct SweepItem {
  FixtureSpec spec;
};

std::vector<SweepItem> parse_grid(const std::string& grid, std::uint64_t seed) {
  std::vector<SweepItem> items;
  std::istringstream in(grid);
  std::string entry;
  while (std::getline(in, entry, ',')) {
    entry.erase(0, entry.find_first_not_of(' '));
    entry.erase(entry.find_last_not_of(' ') + 1);
    if (entry.empty()) continue;
    int count = 1;
    if (const auto star = entry.find('*'); star != std::string::npos) {
      try {
        count = std::stoi(entry.substr(star + 1));
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "bad count in grid entry '" + entry + "'");
      }
      entry = entry.substr(0, star);
    }
    if (count < 1) throw Error(ErrorKind::InvalidArgument, "grid counts must be positive");
    for (int c = 0; c < count; ++c) {
      auto spec = FixtureSpec::parse(entry, seed + items.size());
      if (spec.kind == FixtureSpec::Kind::FromFile) throw Error(ErrorKind::InvalidArgument, "sweeps take generated fixtures only");
      items.push_back({spec});
    }
  }
  if (items.empty()) throw Error(ErrorKind::InvalidArgument, "empty grid");
  return items;
}

struct SweepResult {
  Json fixture;
  std::optional<HodgeGradedDims> hodge;
  std::vector<Certificate> certificates;
  std::string error;
};

SweepResult run_sweep_item(const SweepItem& item, const Options& opts) {
  SweepResult r;
  try {
    const auto fx = make_fixture(item.spec, opts.field);
    auto in = from_fixture(fx);
    r.fixture = in.description;
    std::unique_ptr<Session> owned;
    Session& s = session_for(in, opts, owned);
    const auto nodal = certify_nodal(s, in.points);
    r.fixture["nodal"] = nodal.verdict_string();
    const int n = s.n(), d = s.d();
    if (n >= 3 && d >= n + 1) {
      std::optional<std::size_t> nodes;
      if (nodal.nodal()) nodes = nodal.nodes;
      if (nodal.verdict == NodalCertificate::Verdict::Smooth) nodes = 0;
      r.hodge = s.run("hodge", [&](auto& ctx) { return hodge_graded_dims(ctx, nodes); });
      r.fixture["gr_top"] = r.hodge->gr_top;
      r.fixture["gr_next"] = r.hodge->gr_next ? Json(*r.hodge->gr_next) : Json(nullptr);
      auto c = certify_in(s, "phi", [](auto& ctx) { return phi_injective(ctx); });
      c.input("fixture", item.spec.to_string()).input("seed", std::to_string(item.spec.seed));
      r.certificates.push_back(std::move(c));
    }
  } catch (const Error& e) {
    r.error = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return r;
}

}  // namespace

RunReport cmd_sweep(const std::string& grid, const Options& opts) {
  return guarded("sweep", opts, [&](RunReport& rep) {
    const auto items = parse_grid(grid, opts.seed);
    rep.input["grid"] = grid;
    rep.input["seed"] = opts.seed;
    std::vector<SweepResult> results(items.size());
    const int threads = std::max(1, std::min<int>(opts.threads, static_cast<int>(items.size())));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < items.size();) results[i] = run_sweep_item(items[i], opts);
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    Json fixtures = Json::array();
    std::map<std::pair<int, int>, std::vector<HodgeGradedDims>> groups;
    for (std::size_t i = 0; i < results.size(); ++i) {
      auto& r = results[i];
      if (!r.error.empty()) {
        rep.exit_code = kHypothesisOrInput;
        rep.reason = items[i].spec.to_string() + ": " + r.error;
        Json j;
        j["fixture"] = items[i].spec.to_string();
        j["error"] = r.error;
        fixtures.push_back(j);
        continue;
      }
      fixtures.push_back(r.fixture);
      for (auto& c : r.certificates) rep.add(std::move(c));
      if (r.hodge) groups[{r.hodge->n, r.hodge->d}].push_back(*r.hodge);
    }
    rep.results["fixtures"] = fixtures;
    for (const auto& [nd, dims] : groups) {
      auto c = corollary_constancy_check(dims);
      c.field = opts.field.to_string();
      rep.add(std::move(c));
    }
  });
}

}  // namespace hsurf::app
