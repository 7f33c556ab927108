#pragma once

#include <string>
#include <vector>

#include "hsurf/certificate.hpp"
#include "hsurf/linalg.hpp"
#include "hsurf/milnor.hpp"

namespace hsurf {

/// Standard monomials of (S/J)_k with the reduction S_k -> (S/J)_k.
template <Field F>
class QuotientBasis {
 public:
  using Element = typename F::Element;

  QuotientBasis(JacobianContext<F>& ctx, int k) : ctx_(&ctx), k_(k), standard_(ctx.standard_monomials(k)) {}

  int degree() const noexcept { return k_; }
  std::size_t dim() const noexcept { return standard_.size(); }
  const std::vector<Monomial>& standard_monomials() const noexcept { return standard_; }

  DenseVector<F> reduce(const Polynomial<F>& g) const {
    if (g.degree() != k_) throw Error(ErrorKind::InvalidArgument, "polynomial is not of the basis degree");
    return ctx_->reduce(g);
  }
  DenseVector<F> reduce(std::span<const Element> coords) const { return ctx_->reduce(coords, k_); }
  DenseVector<F> reduce(const Monomial& m) const {
    if (m.degree() != k_) throw Error(ErrorKind::InvalidArgument, "monomial is not of the basis degree");
    return ctx_->tower().normal_form(m);
  }

 private:
  JacobianContext<F>* ctx_;
  int k_;
  std::vector<Monomial> standard_;
};

template <Field F>
QuotientBasis<F> quotient_basis(JacobianContext<F>& ctx, int k) {
  return QuotientBasis<F>(ctx, k);
}

/// phi: (S/J)_d -> Hom((S/J)_{d-n-1}, (S/J)_{2d-n-1}). Row index of the
/// entry for ([Q], t) is q * high_dim + t.
template <Field F>
struct PhiMatrix {
  std::size_t source_dim = 0;
  std::size_t low_dim = 0;   // dim (S/J)_{d-n-1}
  std::size_t high_dim = 0;  // dim (S/J)_{2d-n-1}
  LinearMap<F> matrix;
  std::size_t rank = 0;

  std::size_t target_dim() const noexcept { return low_dim * high_dim; }
};

namespace detail {

inline void require_phi_range(int n, int d) {
  if (d < n + 1) {
    throw Error(ErrorKind::DegreeTooSmall,
                "phi needs d >= n+1 (got n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
}

// Stacks, over the standard monomials Q of degree d-n-1, the classes of
// sign * h * Q in degree 2d-n-1.
template <Field F>
SparseVector<F> stacked_products(JacobianContext<F>& ctx, const Polynomial<F>& h, bool negate) {
  const int low = ctx.d() - ctx.n() - 1;
  const auto& lows = ctx.standard_monomials(low);
  const std::size_t high_dim = ctx.milnor_dim(2 * ctx.d() - ctx.n() - 1);
  SparseVector<F> col;
  for (std::size_t q = 0; q < lows.size(); ++q) {
    const auto v = ctx.reduce(h.times_monomial(lows[q]));
    for (std::size_t t = 0; t < high_dim; ++t) {
      if (ctx.field().is_zero(v[t])) continue;
      col.push(static_cast<std::uint32_t>(q * high_dim + t), negate ? ctx.field().neg(v[t]) : v[t]);
    }
  }
  return col;
}

}  // namespace detail

template <Field F>
PhiMatrix<F> phi_matrix(JacobianContext<F>& ctx) {
  const int n = ctx.n();
  const int d = ctx.d();
  detail::require_phi_range(n, d);
  const auto& src = ctx.standard_monomials(d);
  const std::size_t low = ctx.milnor_dim(d - n - 1);
  const std::size_t high = ctx.milnor_dim(2 * d - n - 1);
  PhiMatrix<F> phi{src.size(), low, high, LinearMap<F>(ctx.field(), low * high, src.size()), 0};
  for (const auto& p : src) {
    phi.matrix.push_column(detail::stacked_products(ctx, Polynomial<F>::monomial(ctx.field(), p, ctx.field().one()), false));
  }
  phi.rank = phi.matrix.rank();
  return phi;
}

template <Field F>
Certificate phi_injective(JacobianContext<F>& ctx) {
  const auto phi = phi_matrix(ctx);
  Certificate c("phi_injective");
  c.set("n", ctx.n()).set("d", ctx.d());
  c.set("source_dim", static_cast<std::int64_t>(phi.source_dim));
  c.set("target_dim", static_cast<std::int64_t>(phi.target_dim()));
  c.set("rank", static_cast<std::int64_t>(phi.rank));
  c.pass = phi.rank == phi.source_dim;
  if (ctx.n() < 3) c.note("n < 3 lies outside the theorem's range; verdict is exploratory");
  return c;
}

/// Classes [G] in (S/J)_t with [x_j G] = 0 in (S/J)_{t+1} for every j, as a
/// basis over the standard monomials of degree t.
template <Field F>
SubspaceBasis<F> variable_multiplication_kernel(JacobianContext<F>& ctx, int t) {
  if (t < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  const auto& std_t = ctx.standard_monomials(t);
  const std::size_t q = ctx.milnor_dim(t + 1);
  const std::size_t nv = static_cast<std::size_t>(ctx.n() + 1);
  LinearMap<F> map(ctx.field(), nv * q, std_t.size());
  for (const auto& s : std_t) {
    SparseVector<F> col;
    for (std::size_t j = 0; j < nv; ++j) {
      const auto v = ctx.tower().normal_form(s.times_variable(static_cast<int>(j)));
      for (std::size_t u = 0; u < q; ++u) {
        if (!ctx.field().is_zero(v[u])) col.push(static_cast<std::uint32_t>(j * q + u), v[u]);
      }
    }
    map.push_column(std::move(col));
  }
  return kernel_basis(map);
}

/// Tangent directions V of a deformation family, all of degree d.
template <Field F>
struct DeformationSubspace {
  std::vector<Polynomial<F>> basis;
};

/// All standard monomials of degree d: a complement of J(f)_d.
template <Field F>
DeformationSubspace<F> standard_complement(JacobianContext<F>& ctx) {
  DeformationSubspace<F> v;
  for (const auto& m : ctx.standard_monomials(ctx.d())) v.basis.push_back(Polynomial<F>::monomial(ctx.field(), m, ctx.field().one()));
  return v;
}

template <Field F>
Certificate effective_deformation_check(JacobianContext<F>& ctx, const DeformationSubspace<F>& v) {
  const int d = ctx.d();
  std::vector<DenseVector<F>> classes;
  for (const auto& h : v.basis) {
    if (h.degree() != d) throw Error(ErrorKind::InvalidArgument, "deformation direction of degree " + std::to_string(h.degree()));
    classes.push_back(ctx.reduce(h));
  }
  const auto span = echelon_span(ctx.field(), ctx.milnor_dim(d), classes);
  Certificate c("effective_deformation");
  c.set("dim_V", static_cast<std::int64_t>(v.basis.size()));
  c.set("dim_J_d", static_cast<std::int64_t>(ctx.jacobian_dim(d)));
  c.set("dim_V_plus_J_d", static_cast<std::int64_t>(span.dim() + ctx.jacobian_dim(d)));
  c.pass = span.dim() == v.basis.size();
  return c;
}

// n >= 3 odd or n >= 6 even, i.e. everything from 3 on except 4.
inline bool period_dimension_supported(int n) { return n >= 3 && n != 4; }

/// Matrix of h -> (h1 -> [-h h1]) with h running over V and h1 over the
/// standard monomials of degree d-n-1, flattened like PhiMatrix.
template <Field F>
struct PeriodDifferential {
  LinearMap<F> matrix;
  std::size_t rank = 0;
  Certificate certificate;
};

template <Field F>
PeriodDifferential<F> period_differential(JacobianContext<F>& ctx, const DeformationSubspace<F>& v) {
  const int n = ctx.n();
  const int d = ctx.d();
  if (!period_dimension_supported(n)) {
    throw Error(ErrorKind::UnsupportedDimension,
                "period differential is only certified for n >= 3 odd or n >= 6 even (got n=" + std::to_string(n) + ")");
  }
  detail::require_phi_range(n, d);
  const auto eff = effective_deformation_check(ctx, v);
  if (!eff.pass) throw Error(ErrorKind::NotEffective, "the deformation directions meet J(f)_d");
  const std::size_t low = ctx.milnor_dim(d - n - 1);
  const std::size_t high = ctx.milnor_dim(2 * d - n - 1);
  PeriodDifferential<F> out{LinearMap<F>(ctx.field(), low * high, v.basis.size()), 0, Certificate("period_differential_injective")};
  for (const auto& h : v.basis) out.matrix.push_column(detail::stacked_products(ctx, h, true));
  out.rank = out.matrix.rank();
  auto& c = out.certificate;
  c.set("n", n).set("d", d);
  c.set("dim_V", static_cast<std::int64_t>(v.basis.size()));
  c.set("target_dim", static_cast<std::int64_t>(low * high));
  c.set("rank", static_cast<std::int64_t>(out.rank));
  c.pass = out.rank == v.basis.size();
  return out;
}

}  // namespace hsurf
