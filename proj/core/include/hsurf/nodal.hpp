#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsurf/polynomial.hpp"
#include "hsurf/session.hpp"

namespace hsurf {

/// A rational point of P^n with a chart whose coordinate is nonzero.
struct ProjectivePoint {
  std::vector<mpq_class> coords;
  int chart = 0;

  // Default chart: first coordinate of maximal absolute numerator.
  static ProjectivePoint make(std::vector<mpq_class> coords, std::optional<int> chart = std::nullopt);
  static ProjectivePoint parse(std::string_view text, int n);

  int n() const noexcept { return static_cast<int>(coords.size()) - 1; }
  std::string to_string() const;

  // Equality up to a nonzero scalar.
  bool same_point(const ProjectivePoint& other) const;
};

bool is_singular_at(const RationalPolynomial& f, const ProjectivePoint& p);

/// Rank of the Hessian of f dehomogenized in the chart (p's own unless
/// given), at p. Throws NotSingular unless f is singular at p.
int hessian_rank_at(const RationalPolynomial& f, const ProjectivePoint& p, std::optional<int> chart = std::nullopt);

struct PointCheck {
  bool singular = false;
  int hessian_rank = -1;  // -1 when not singular

  friend bool operator==(const PointCheck&, const PointCheck&) = default;
};

struct NodalCertificate {
  enum class Verdict { Nodal, Smooth, Failed };

  Verdict verdict = Verdict::Failed;
  std::size_t nodes = 0;  // m in Nodal(m)
  std::string reason;     // first violated condition, for Failed
  std::vector<ProjectivePoint> points;
  std::vector<PointCheck> per_point;
  std::optional<std::size_t> tjurina;  // absent when the scan did not stabilize

  bool nodal() const noexcept { return verdict == Verdict::Nodal; }
  std::string verdict_string() const;  // "Nodal(2)", "Smooth", "Failed(...)"
};

/// Local checks at every listed point plus the global Tjurina count, which
/// must equal the number of points.
NodalCertificate certify_nodal(Session& session, const std::vector<ProjectivePoint>& points);

}  // namespace hsurf
