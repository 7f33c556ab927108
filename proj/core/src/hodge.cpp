#include "hsurf/hodge.hpp"

#include <algorithm>
#include <map>

namespace hsurf {

std::size_t ideal_of_points_dim(const std::vector<std::vector<mpq_class>>& points, int n, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  const auto monos = monomial_basis(n, k);
  RationalField field;
  Echelonizer<RationalField> ech(field, monos.size());
  for (const auto& p : points) {
    if (p.size() != static_cast<std::size_t>(n + 1)) throw Error(ErrorKind::InvalidArgument, "point has the wrong number of coordinates");
    if (std::all_of(p.begin(), p.end(), [](const mpq_class& x) { return sgn(x) == 0; })) {
      throw Error(ErrorKind::DegeneratePoint, "the zero vector is not a projective point");
    }
    DenseVector<RationalField> row;
    row.reserve(monos.size());
    for (const auto& m : monos) {
      mpq_class v = 1;
      for (int i = 0; i <= n; ++i) {
        for (int e = 0; e < m[i]; ++e) v *= p[static_cast<std::size_t>(i)];
      }
      row.push_back(v);
    }
    ech.insert(row);
  }
  return monos.size() - ech.rank();
}

Certificate corollary_constancy_check(const std::vector<HodgeGradedDims>& fixtures) {
  Certificate c("hodge_constancy");
  c.set("fixtures", static_cast<std::int64_t>(fixtures.size()));
  c.pass = true;
  if (fixtures.empty()) return c;
  const int n = fixtures.front().n;
  const int d = fixtures.front().d;
  for (const auto& h : fixtures) {
    if (h.n != n || h.d != d) {
      throw Error(ErrorKind::MixedParameters, "fixtures mix (n,d) = (" + std::to_string(n) + "," + std::to_string(d) +
                                                  ") and (" + std::to_string(h.n) + "," + std::to_string(h.d) + ")");
    }
  }
  c.set("n", n).set("d", d);
  c.set("gr_top", static_cast<std::int64_t>(fixtures.front().gr_top));
  for (const auto& h : fixtures) {
    if (h.gr_top != fixtures.front().gr_top) {
      c.pass = false;
      c.note("gr_top differs: " + std::to_string(h.gr_top) + " vs " + std::to_string(fixtures.front().gr_top));
    }
  }
  // Grouping by node count; fixtures without a certified count form their own group.
  std::map<std::optional<std::size_t>, std::optional<std::size_t>> seen;
  for (const auto& h : fixtures) {
    if (!h.gr_next) continue;
    auto [it, inserted] = seen.try_emplace(h.node_count, h.gr_next);
    if (!inserted && it->second != h.gr_next) {
      c.pass = false;
      c.note("gr_next differs within node count " + (h.node_count ? std::to_string(*h.node_count) : std::string("unknown")));
    }
  }
  for (const auto& [nodes, value] : seen) {
    if (nodes) c.set("gr_next@" + std::to_string(*nodes) + "_nodes", static_cast<std::int64_t>(*value));
  }
  if (n == 4) c.note("n = 4: only gr_top is compared");
  if (seen.count(std::nullopt)) c.note("some fixtures carry no certified node count");
  return c;
}

}  // namespace hsurf

namespace hsurf {

template HodgeGradedDims hodge_graded_dims(JacobianContext<PrimeField>&, std::optional<std::size_t>);
template HodgeGradedDims hodge_graded_dims(JacobianContext<RationalField>&, std::optional<std::size_t>);

}  // namespace hsurf
