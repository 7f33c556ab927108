#include "hsurf_app/fixtures.hpp"

#include <sstream>

#include "hsurf/linalg.hpp"
#include "hsurf/parse.hpp"
#include "hsurf_app/io.hpp"

namespace hsurf::app {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "bad " + what + " '" + s + "' in fixture spec");
  }
}

constexpr int kMaxAttempts = 200;
constexpr long kCoefficientBound = 3;

RationalPolynomial random_form(std::mt19937_64& rng, int n, int k, int vars) {
  // form of degree k in x0..x_{vars-1}, embedded in n+1 variables
  std::vector<RationalPolynomial::Term> terms;
  for (const auto& m : monomial_basis(vars - 1, k)) {
    std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
    for (int i = 0; i < vars; ++i) e[static_cast<std::size_t>(i)] = m[i];
    terms.push_back({Monomial(std::span<const int>(e)), mpq_class(draw_coefficient(rng, kCoefficientBound))});
  }
  return RationalPolynomial::from_terms(RationalField{}, n, k, std::move(terms));
}

bool full_rank_quadric(const RationalPolynomial& q, int vars) {
  RationalField field;
  Echelonizer<RationalField> ech(field, static_cast<std::size_t>(vars));
  for (int i = 0; i < vars; ++i) {
    DenseVector<RationalField> row;
    const auto qi = q.partial(i);
    for (int j = 0; j < vars; ++j) row.push_back(qi.partial(j).coefficient(Monomial(q.n() + 1)));
    ech.insert(row);
  }
  return ech.rank() == static_cast<std::size_t>(vars);
}

RationalPolynomial x_power(int n, int i, int e) {
  std::vector<int> v(static_cast<std::size_t>(n + 1), 0);
  v[static_cast<std::size_t>(i)] = e;
  return RationalPolynomial::monomial(RationalField{}, Monomial(std::span<const int>(v)), 1);
}

// x_n^{d-2} q + sum_{j=3..d} x_n^{d-j} c_j with q, c_j forms in x0..x_{n-1}.
RationalPolynomial draw_one_node(std::mt19937_64& rng, int n, int d) {
  RationalPolynomial q(RationalField{}, n, 2);
  do {
    q = random_form(rng, n, 2, n);
  } while (!full_rank_quadric(q, n));
  RationalPolynomial f = x_power(n, n, d - 2) * q;
  for (int j = 3; j <= d; ++j) f = f + x_power(n, n, d - j) * random_form(rng, n, j, n);
  return f;
}

// Nodes at e_n, e_{n-1}, ...: every monomial with x_k-exponent >= d-1 at a
// node coordinate k is dropped, the rest drawn at random.
RationalPolynomial draw_multi_node(std::mt19937_64& rng, int n, int d, int m) {
  std::vector<RationalPolynomial::Term> terms;
  for (const auto& mono : monomial_basis(n, d)) {
    bool banned = false;
    for (int k = n; k > n - m; --k) banned = banned || mono[k] >= d - 1;
    if (banned) continue;
    terms.push_back({mono, mpq_class(draw_coefficient(rng, kCoefficientBound))});
  }
  return RationalPolynomial::from_terms(RationalField{}, n, d, std::move(terms));
}

}  // namespace

FixtureSpec FixtureSpec::parse(const std::string& text, std::uint64_t seed) {
  FixtureSpec s;
  s.seed = seed;
  const auto parts = split(text, ':');
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "empty fixture spec");
  const auto& kind = parts[0];
  if (kind == "file") {
    if (parts.size() < 2 || parts.size() > 3) throw Error(ErrorKind::InvalidArgument, "expected file:PATH[:POINTS]");
    s.kind = Kind::FromFile;
    s.n = -1;
    s.d = -1;
    s.path = parts[1];
    if (parts.size() == 3) s.points_path = parts[2];
    return s;
  }
  if (kind == "fermat" || kind == "one_node") {
    if (parts.size() != 3) throw Error(ErrorKind::InvalidArgument, "expected " + kind + ":N:D");
    s.kind = kind == "fermat" ? Kind::Fermat : Kind::OneNode;
    s.nodes = kind == "fermat" ? 0 : 1;
  } else if (kind == "multi_node") {
    if (parts.size() != 4) throw Error(ErrorKind::InvalidArgument, "expected multi_node:N:D:M");
    s.kind = Kind::MultiNode;
    s.nodes = to_int(parts[3], "node count");
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown fixture kind '" + kind + "'");
  }
  s.n = to_int(parts[1], "n");
  s.d = to_int(parts[2], "d");
  if (s.n < 1 || s.n + 1 > kMaxVariables) throw Error(ErrorKind::InvalidArgument, "n out of range in fixture spec");
  if (s.d < 2) throw Error(ErrorKind::DegreeTooSmall, "fixture degree must be at least 2");
  if (s.kind == Kind::OneNode && s.d < 3) throw Error(ErrorKind::DegreeTooSmall, "one_node needs d >= 3");
  if (s.kind == Kind::MultiNode && (s.nodes < 1 || s.nodes > s.n + 1)) {
    throw Error(ErrorKind::InvalidArgument, "multi_node needs 1 <= M <= n+1");
  }
  return s;
}

std::string FixtureSpec::to_string() const {
  switch (kind) {
    case Kind::Fermat:
      return "fermat:" + std::to_string(n) + ":" + std::to_string(d);
    case Kind::OneNode:
      return "one_node:" + std::to_string(n) + ":" + std::to_string(d);
    case Kind::MultiNode:
      return "multi_node:" + std::to_string(n) + ":" + std::to_string(d) + ":" + std::to_string(nodes);
    case Kind::FromFile:
      return "file:" + path + (points_path.empty() ? "" : ":" + points_path);
  }
  return "unknown";
}

ProjectivePoint coordinate_point(int n, int k) {
  std::vector<mpq_class> c(static_cast<std::size_t>(n + 1), 0);
  c[static_cast<std::size_t>(k)] = 1;
  return ProjectivePoint::make(std::move(c));
}

Fixture make_fixture(const FixtureSpec& spec, const FieldConfig& config) {
  Fixture fx{spec, RationalPolynomial(RationalField{}, std::max(spec.n, 0), std::max(spec.d, 0)), {}, 1, nullptr};
  switch (spec.kind) {
    case FixtureSpec::Kind::Fermat:
      fx.f = fermat_polynomial(spec.n, spec.d);
      return fx;
    case FixtureSpec::Kind::FromFile: {
      const auto text = read_polynomial_text(spec.path);
      fx.f = parse_polynomial(text, infer_ambient_dimension(text));
      fx.spec.n = fx.f.n();
      fx.spec.d = fx.f.degree();
      if (!spec.points_path.empty()) fx.points = read_points(spec.points_path, fx.f.n());
      return fx;
    }
    case FixtureSpec::Kind::OneNode:
    case FixtureSpec::Kind::MultiNode:
      break;
  }
  const int m = spec.kind == FixtureSpec::Kind::OneNode ? 1 : spec.nodes;
  for (int k = spec.n; k > spec.n - m; --k) fx.points.push_back(coordinate_point(spec.n, k));
  std::mt19937_64 rng(spec.seed);
  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    fx.f = spec.kind == FixtureSpec::Kind::OneNode ? draw_one_node(rng, spec.n, spec.d)
                                                   : draw_multi_node(rng, spec.n, spec.d, m);
    fx.attempts = attempt;
    auto session = std::make_shared<Session>(fx.f, config);
    if (certify_nodal(*session, fx.points).nodal()) {
      fx.session = std::move(session);
      return fx;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "no certified fixture for " + spec.to_string() + " after " +
                                              std::to_string(kMaxAttempts) + " draws");
}

}  // namespace hsurf::app
