#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "hsurf/linalg.hpp"
#include "hsurf/polynomial.hpp"
#include "hsurf/quotient_tower.hpp"

namespace hsurf {

/// Graded data of J(f) and S/J(f) for one polynomial over one field.
/// Degrees are built on demand and cached; all queries are safe to call
/// from several threads.
template <Field F>
class JacobianContext {
 public:
  using Element = typename F::Element;

  explicit JacobianContext(Polynomial<F> f) : f_(std::move(f)), tower_(f_) {}

  const Polynomial<F>& polynomial() const noexcept { return f_; }
  const F& field() const noexcept { return f_.field(); }
  int n() const noexcept { return f_.n(); }
  int d() const noexcept { return f_.degree(); }
  QuotientTower<F>& tower() noexcept { return tower_; }

  std::size_t milnor_dim(int k) {
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
    return tower_.dim(k);
  }
  std::size_t jacobian_dim(int k) { return monomial_count(k) - milnor_dim(k); }
  std::size_t monomial_count(int k) const { return static_cast<std::size_t>(binomial(n() + k, n())); }

  const std::vector<Monomial>& standard_monomials(int k) { return tower_.degree(k).standard; }

  /// Echelon basis of J(f)_k: one row m - NF(m) per leading monomial m.
  SubspaceBasis<F> jacobian_basis(int k) {
    const auto& deg = tower_.degree(k);
    MonomialIndexer idx(n() + 1, k);
    std::vector<std::size_t> std_cols;
    for (const auto& m : deg.standard) std_cols.push_back(idx.index(m));
    std::vector<DenseVector<F>> rows;
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < idx.size(); ++r) {
      if (deg.lookup[r] >= 0) continue;
      const auto nf = tower_.normal_form(idx.monomial(r));
      DenseVector<F> row(idx.size(), field().zero());
      row[r] = field().one();
      for (std::size_t j = 0; j < nf.size(); ++j) row[std_cols[j]] = field().neg(nf[j]);
      rows.push_back(std::move(row));
      pivots.push_back(r);
    }
    return SubspaceBasis<F>::from_rref(field(), idx.size(), std::move(rows), std::move(pivots));
  }

  /// Coordinates of the class of g over standard_monomials(deg g).
  DenseVector<F> reduce(const Polynomial<F>& g) { return tower_.normal_form(g); }
  DenseVector<F> reduce(std::span<const Element> coords, int k) { return tower_.normal_form(coords, k); }

  bool in_jacobian(const Polynomial<F>& g) {
    const auto v = reduce(g);
    return std::all_of(v.begin(), v.end(), [&](const Element& x) { return field().is_zero(x); });
  }

 private:
  Polynomial<F> f_;
  QuotientTower<F> tower_;
};

/// J(f)_k spanned directly by the products x^a * df/dx_j; the reference
/// computation the tower is checked against.
template <Field F>
SubspaceBasis<F> macaulay_jacobian_basis(const Polynomial<F>& f, int k) {
  const int n = f.n();
  const int a = k - f.degree() + 1;
  MonomialIndexer idx(n + 1, k);
  if (a < 0) return SubspaceBasis<F>(f.field(), idx.size());
  std::vector<SparseVector<F>> gens;
  for (const auto& p : partial_derivatives(f)) {
    const auto m = multiplication_map(p, a);
    for (const auto& c : m.columns()) gens.push_back(c);
  }
  return echelon_span(f.field(), idx.size(), gens);
}

struct HilbertProfile {
  std::vector<std::pair<int, std::size_t>> dims;  // (k, dim (S/J)_k), consecutive k from 0
  std::optional<std::size_t> stabilized_value;

  friend bool operator==(const HilbertProfile&, const HilbertProfile&) = default;
};

template <Field F>
HilbertProfile hilbert_profile(JacobianContext<F>& ctx, int k_max) {
  HilbertProfile h;
  for (int k = 0; k <= k_max; ++k) h.dims.emplace_back(k, ctx.milnor_dim(k));
  // Only trusted past the top degree of the smooth reference.
  const std::size_t m = h.dims.size();
  if (k_max - 2 >= (ctx.n() + 1) * (ctx.d() - 2) && h.dims[m - 1].second == h.dims[m - 2].second &&
      h.dims[m - 2].second == h.dims[m - 3].second) {
    h.stabilized_value = h.dims[m - 1].second;
  }
  return h;
}

/// Largest q with dim (S/J)_k equal to the smooth reference for all k <= q;
/// nullopt stands for the smooth case, where no such maximum exists.
template <Field F>
std::optional<int> coincidence_threshold(JacobianContext<F>& ctx) {
  const int top = (ctx.n() + 1) * (ctx.d() - 2);
  for (int k = 0; k <= top + 1; ++k) {
    if (ctx.milnor_dim(k) != smooth_reference_dim(ctx.n(), ctx.d(), k)) return k - 1;
  }
  // (S/J)_{top+1} = 0 makes the Milnor algebra finite, so f is smooth.
  return std::nullopt;
}

inline int tjurina_scan_bound(int n, int d) { return (n + 1) * (d - 2) + 3 * d; }

/// First k >= (n+1)(d-2) opening a run of three equal values of
/// dim (S/J)_k; that value is the Tjurina number.
template <Field F>
int milnor_stable_degree(JacobianContext<F>& ctx) {
  const int start = (ctx.n() + 1) * (ctx.d() - 2);
  const int bound = tjurina_scan_bound(ctx.n(), ctx.d());
  for (int k = start; k + 2 <= bound; ++k) {
    const auto v = ctx.milnor_dim(k);
    if (ctx.milnor_dim(k + 1) == v && ctx.milnor_dim(k + 2) == v) return k;
  }
  throw Error(ErrorKind::NoStabilization,
              "dim (S/J)_k did not stabilize by k = " + std::to_string(bound) + "; singularities are not isolated");
}

template <Field F>
std::size_t tjurina_count(JacobianContext<F>& ctx) {
  return ctx.milnor_dim(milnor_stable_degree(ctx));
}

/// Classes [G] in (S/J)_k with G * S_m inside J; returned as a basis over the
/// standard monomials of degree k.
template <Field F>
SubspaceBasis<F> colon_classes(JacobianContext<F>& ctx, int k, int m) {
  const auto& std_k = ctx.standard_monomials(k);
  const auto monos = monomial_basis(ctx.n(), m);
  const std::size_t q = ctx.milnor_dim(k + m);
  LinearMap<F> map(ctx.field(), monos.size() * q, std_k.size());
  for (const auto& s : std_k) {
    SparseVector<F> col;
    for (std::size_t u = 0; u < monos.size(); ++u) {
      const auto nf = ctx.tower().normal_form(s * monos[u]);
      for (std::size_t t = 0; t < nf.size(); ++t) {
        if (!ctx.field().is_zero(nf[t])) col.push(static_cast<std::uint32_t>(u * q + t), nf[t]);
      }
    }
    map.push_column(std::move(col));
  }
  return kernel_basis(map);
}

/// dim I(f)_k - dim J(f)_k, with I(f) the saturation; the colon exponent
/// used is written to `steps` when given.
//
// Degree by degree the chain (J : m^j)_k can stall before it reaches I(f)_k,
// so it starts where J has already become saturated: past the stable degree
// s, J_{k+j} = I(f)_{k+j} and G is in I(f) iff G * S_j lies in J.
template <Field F>
std::size_t saturation_excess(JacobianContext<F>& ctx, int k, int* steps = nullptr) {
  const int s = milnor_stable_degree(ctx);
  const int first = std::max(1, s - k);
  const int bound = first + (ctx.n() + 1) * (ctx.d() - 2);
  std::size_t prev = colon_classes(ctx, k, first).dim();
  for (int m = first; m <= bound; ++m) {
    const std::size_t next = colon_classes(ctx, k, m + 1).dim();
    if (next == prev) {
      if (steps) *steps = m;
      return prev;
    }
    prev = next;
  }
  throw Error(ErrorKind::NoStabilization, "saturation chain did not stabilize in degree " + std::to_string(k));
}

/// I(f)_k as a subspace of S_k in monomial coordinates.
template <Field F>
SubspaceBasis<F> saturation_graded(JacobianContext<F>& ctx, int k) {
  int steps = 0;
  saturation_excess(ctx, k, &steps);
  const auto classes = colon_classes(ctx, k, steps);
  const auto& std_k = ctx.standard_monomials(k);
  MonomialIndexer idx(ctx.n() + 1, k);
  auto j = ctx.jacobian_basis(k);
  std::vector<DenseVector<F>> vecs = j.rows();
  for (const auto& row : classes.rows()) {
    DenseVector<F> v(idx.size(), ctx.field().zero());
    for (std::size_t t = 0; t < row.size(); ++t) v[idx.index(std_k[t])] = row[t];
    vecs.push_back(std::move(v));
  }
  return echelon_span(ctx.field(), idx.size(), vecs);
}

}  // namespace hsurf
