#include "hsurf/nodal.hpp"

#include <algorithm>

#include "hsurf/linalg.hpp"
#include "hsurf/parse.hpp"

namespace hsurf {

ProjectivePoint ProjectivePoint::make(std::vector<mpq_class> coords, std::optional<int> chart) {
  if (coords.empty()) throw Error(ErrorKind::InvalidArgument, "point without coordinates");
  ProjectivePoint p;
  p.coords = std::move(coords);
  if (chart) {
    if (*chart < 0 || *chart >= static_cast<int>(p.coords.size())) throw Error(ErrorKind::InvalidArgument, "chart out of range");
    if (sgn(p.coords[static_cast<std::size_t>(*chart)]) == 0) {
      throw Error(ErrorKind::DegeneratePoint, "chart coordinate x" + std::to_string(*chart) + " is zero");
    }
    p.chart = *chart;
    return p;
  }
  int best = -1;
  mpz_class best_abs;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    mpz_class a = abs(p.coords[i].get_num());
    if (a > 0 && (best < 0 || a > best_abs)) {
      best = static_cast<int>(i);
      best_abs = a;
    }
  }
  if (best < 0) throw Error(ErrorKind::DegeneratePoint, "all coordinates are zero");
  p.chart = best;
  return p;
}

ProjectivePoint ProjectivePoint::parse(std::string_view text, int n) { return make(parse_point(text, n)); }

std::string ProjectivePoint::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ":";
    out += coords[i].get_str();
  }
  return out + "]";
}

bool ProjectivePoint::same_point(const ProjectivePoint& other) const {
  if (coords.size() != other.coords.size()) return false;
  // a ~ b iff a_i b_j = a_j b_i for all i, j; comparing against one fixed
  // nonzero coordinate of a suffices.
  const std::size_t c = static_cast<std::size_t>(chart);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] * other.coords[c] != coords[c] * other.coords[i]) return false;
  }
  return sgn(other.coords[c]) != 0;
}

namespace {

std::vector<mpq_class> normalized(const ProjectivePoint& p, int chart) {
  std::vector<mpq_class> v = p.coords;
  const mpq_class s = v[static_cast<std::size_t>(chart)];
  for (auto& x : v) x /= s;
  return v;
}

}  // namespace

bool is_singular_at(const RationalPolynomial& f, const ProjectivePoint& p) {
  if (p.n() != f.n()) throw Error(ErrorKind::InvalidArgument, "point and polynomial live in different P^n");
  if (f.degree() < 1) return false;
  for (int j = 0; j <= f.n(); ++j) {
    if (sgn(f.partial(j).evaluate(p.coords)) != 0) return false;
  }
  return true;
}

int hessian_rank_at(const RationalPolynomial& f, const ProjectivePoint& p, std::optional<int> chart) {
  const int c = chart.value_or(p.chart);
  if (c < 0 || c > f.n()) throw Error(ErrorKind::InvalidArgument, "chart out of range");
  if (sgn(p.coords.at(static_cast<std::size_t>(c))) == 0) throw Error(ErrorKind::DegeneratePoint, "chart coordinate is zero");
  if (!is_singular_at(f, p)) throw Error(ErrorKind::NotSingular, "f is not singular at " + p.to_string());
  const int n = f.n();
  if (f.degree() < 2) return 0;
  // Setting x_c = 1 leaves the other second partials unchanged.
  const auto x = normalized(p, c);
  RationalField field;
  Echelonizer<RationalField> ech(field, static_cast<std::size_t>(n));
  for (int i = 0; i <= n; ++i) {
    if (i == c) continue;
    const auto fi = f.partial(i);
    DenseVector<RationalField> row;
    for (int j = 0; j <= n; ++j) {
      if (j == c) continue;
      row.push_back(fi.partial(j).evaluate(x));
    }
    ech.insert(row);
  }
  return static_cast<int>(ech.rank());
}

std::string NodalCertificate::verdict_string() const {
  switch (verdict) {
    case Verdict::Nodal:
      return "Nodal(" + std::to_string(nodes) + ")";
    case Verdict::Smooth:
      return "Smooth";
    case Verdict::Failed:
      return "Failed(" + reason + ")";
  }
  return "Failed(unknown)";
}

NodalCertificate certify_nodal(Session& session, const std::vector<ProjectivePoint>& points) {
  const auto& f = session.polynomial();
  NodalCertificate cert;
  cert.points = points;
  auto fail = [&](std::string why) {
    cert.verdict = NodalCertificate::Verdict::Failed;
    cert.reason = std::move(why);
    return cert;
  };

  for (const auto& p : points) {
    PointCheck pc;
    if (p.n() == f.n()) {
      pc.singular = is_singular_at(f, p);
      if (pc.singular) pc.hessian_rank = hessian_rank_at(f, p);
    }
    cert.per_point.push_back(pc);
  }
  try {
    cert.tjurina = session.run("tjurina", [](auto& ctx) { return tjurina_count(ctx); });
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoStabilization) throw;
    return fail("dim (S/J)_k did not stabilize; singularities are not isolated");
  }

  const std::size_t tau = *cert.tjurina;
  if (points.empty()) {
    if (tau == 0) {
      cert.verdict = NodalCertificate::Verdict::Smooth;
      return cert;
    }
    return fail("tjurina=" + std::to_string(tau) + " but 0 points listed");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].n() != f.n()) return fail("point " + std::to_string(i + 1) + " has the wrong number of coordinates");
    if (!cert.per_point[i].singular) return fail("f is not singular at point " + std::to_string(i + 1) + " " + points[i].to_string());
    if (cert.per_point[i].hessian_rank != f.n()) {
      return fail("Hessian rank " + std::to_string(cert.per_point[i].hessian_rank) + " < " + std::to_string(f.n()) +
                  " at point " + std::to_string(i + 1));
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].same_point(points[j])) return fail("points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
    }
  }
  if (tau != points.size()) {
    return fail("tjurina=" + std::to_string(tau) + " but " + std::to_string(points.size()) + " points listed");
  }
  cert.verdict = NodalCertificate::Verdict::Nodal;
  cert.nodes = points.size();
  return cert;
}

}  // namespace hsurf
