#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsurf/certificate.hpp"
#include "hsurf/milnor.hpp"

namespace hsurf {

/// Dimensions of the two top Hodge-graded pieces of the primitive
/// cohomology, read off the Jacobian data.
struct HodgeGradedDims {
  int n = 0;
  int d = 0;
  std::optional<std::size_t> node_count;  // only from a nodal certificate
  std::size_t gr_top = 0;
  std::optional<std::size_t> gr_next;  // absent for n = 4
  std::string gr_next_note;

  // dim F^{n-2} = gr_top + gr_next, when gr_next is known.
  std::optional<std::size_t> f_next() const {
    if (!gr_next) return std::nullopt;
    return gr_top + *gr_next;
  }

  friend bool operator==(const HodgeGradedDims&, const HodgeGradedDims&) = default;
};

template <Field F>
HodgeGradedDims hodge_graded_dims(JacobianContext<F>& ctx, std::optional<std::size_t> node_count = std::nullopt) {
  const int n = ctx.n();
  const int d = ctx.d();
  if (n < 3) throw Error(ErrorKind::UnsupportedDimension, "Hodge-graded dimensions need n >= 3");
  if (d < n + 1) throw Error(ErrorKind::DegreeTooSmall, "Hodge-graded dimensions need d >= n+1");
  HodgeGradedDims h;
  h.n = n;
  h.d = d;
  h.node_count = node_count;
  h.gr_top = ctx.milnor_dim(d - n - 1);
  if (n == 3) {
    h.gr_next = saturation_excess(ctx, 2 * d - 4);
  } else if (n == 4) {
    h.gr_next_note = "unsupported for n = 4: the graded piece is not determined by J(f) and its saturation";
  } else {
    h.gr_next = ctx.milnor_dim(2 * d - n - 1);
  }
  return h;
}

/// dim { G in S_k : G(p) = 0 for all p }, by exact evaluation rank.
std::size_t ideal_of_points_dim(const std::vector<std::vector<mpq_class>>& points, int n, int k);

/// Constancy of gr_top across the fixtures and of gr_next within groups of
/// equal node count. All entries must share (n, d).
Certificate corollary_constancy_check(const std::vector<HodgeGradedDims>& fixtures);

}  // namespace hsurf
