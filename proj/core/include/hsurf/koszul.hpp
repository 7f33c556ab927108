#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hsurf/linalg.hpp"
#include "hsurf/milnor.hpp"

namespace hsurf {

// Coordinates on (S_r)^{n+1} are slot-major: slot j occupies the block
// [j*dim S_r, (j+1)*dim S_r) in monomial order.

/// (a_0..a_n) -> sum a_j * df/dx_j, from (S_r)^{n+1} to S_{r+d-1}.
template <Field F>
LinearMap<F> syzygy_map(const Polynomial<F>& f, int r) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "negative syzygy degree");
  if (f.degree() < 2) throw Error(ErrorKind::DegreeTooSmall, "syzygies need deg f >= 2");
  const int n = f.n();
  const auto partials = partial_derivatives(f);
  MonomialIndexer src(n + 1, r);
  MonomialIndexer dst(n + 1, r + f.degree() - 1);
  LinearMap<F> map(f.field(), dst.size(), src.size() * static_cast<std::size_t>(n + 1));
  for (int j = 0; j <= n; ++j) {
    const auto block = multiplication_map(partials[static_cast<std::size_t>(j)], r);
    for (const auto& c : block.columns()) map.push_column(c);
  }
  return map;
}

template <Field F>
SubspaceBasis<F> syzygy_space(const Polynomial<F>& f, int r) {
  return kernel_basis(syzygy_map(f, r));
}

/// dim of the syzygy space from the Jacobian dimensions: the map above is
/// onto J(f)_{r+d-1}.
template <Field F>
std::size_t syzygy_dim(JacobianContext<F>& ctx, int r) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "negative syzygy degree");
  return static_cast<std::size_t>(ctx.n() + 1) * ctx.monomial_count(r) - ctx.jacobian_dim(r + ctx.d() - 1);
}

/// Generators h * E_ij, h a monomial of degree r-d+1, where E_ij has
/// df/dx_j in slot i and -df/dx_i in slot j.
template <Field F>
std::vector<SparseVector<F>> trivial_syzygy_generators(const Polynomial<F>& f, int r) {
  const int n = f.n();
  const int a = r - f.degree() + 1;
  std::vector<SparseVector<F>> gens;
  if (a < 0) return gens;
  const auto& field = f.field();
  const auto partials = partial_derivatives(f);
  MonomialIndexer idx(n + 1, r);
  const std::size_t block = idx.size();
  for (const auto& h : monomial_basis(n, a)) {
    for (int i = 0; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        SparseVector<F> v;
        const auto hj = partials[static_cast<std::size_t>(j)].times_monomial(h);
        const auto hi = partials[static_cast<std::size_t>(i)].times_monomial(h);
        for (const auto& t : hj.terms()) {
          v.push(static_cast<std::uint32_t>(static_cast<std::size_t>(i) * block + idx.index(t.monomial)), t.coeff);
        }
        for (const auto& t : hi.terms()) {
          v.push(static_cast<std::uint32_t>(static_cast<std::size_t>(j) * block + idx.index(t.monomial)), field.neg(t.coeff));
        }
        // slot blocks are increasing and each product keeps monomial order
        gens.push_back(std::move(v));
      }
    }
  }
  return gens;
}

template <Field F>
SubspaceBasis<F> trivial_syzygy_space(const Polynomial<F>& f, int r) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "negative syzygy degree");
  const std::size_t ambient = static_cast<std::size_t>(f.n() + 1) * static_cast<std::size_t>(binomial(f.n() + r, f.n()));
  return echelon_span(f.field(), ambient, trivial_syzygy_generators(f, r));
}

template <Field F>
std::size_t trivial_syzygy_dim(const Polynomial<F>& f, int r) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "negative syzygy degree");
  const std::size_t ambient = static_cast<std::size_t>(f.n() + 1) * static_cast<std::size_t>(binomial(f.n() + r, f.n()));
  // the generator matrix is very sparse; Markowitz pivoting beats dense rows here
  return sparse_rank(f.field(), ambient, trivial_syzygy_generators(f, r));
}

/// How a Koszul dimension was obtained.
///  Direct: trivial syzygies ranked by elimination.
///  Euler:  alternating-sum identity, valid once the singularities are known
///          to be isolated; used when the direct matrix exceeds the budget.
enum class KoszulRoute { Direct, Euler };

std::string_view to_string(KoszulRoute route);

struct KoszulOptions {
  // Largest generator count * ambient size ranked directly.
  std::size_t direct_budget = 50'000'000;
};

struct KoszulValue {
  std::size_t dim = 0;
  KoszulRoute route = KoszulRoute::Direct;

  friend bool operator==(const KoszulValue&, const KoszulValue&) = default;
};

inline std::size_t trivial_syzygy_cost(int n, int d, int r) {
  const int a = r - d + 1;
  if (a < 0) return 0;
  const std::size_t gens = static_cast<std::size_t>(binomial(n + 1, 2) * binomial(n + a, n));
  return gens * static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(binomial(n + r, n));
}

/// dim H^n(K(f))_m, with deg dx_j = 1: syzygies of degree r = m - n modulo
/// the trivial ones. Zero for m < n.
template <Field F>
KoszulValue koszul_hn(JacobianContext<F>& ctx, int m, const KoszulOptions& opts = {}) {
  const int n = ctx.n();
  const int d = ctx.d();
  if (m < n) return {0, KoszulRoute::Direct};
  const int r = m - n;
  if (trivial_syzygy_cost(n, d, r) <= opts.direct_budget) {
    return {syzygy_dim(ctx, r) - trivial_syzygy_dim(ctx.polynomial(), r), KoszulRoute::Direct};
  }
  tjurina_count(ctx);  // throws NoStabilization unless the singularities are isolated
  const int k = r + d - 1;
  return {ctx.milnor_dim(k) - static_cast<std::size_t>(smooth_reference_dim(n, d, k)), KoszulRoute::Euler};
}

template <Field F>
std::size_t koszul_hn_dim(JacobianContext<F>& ctx, int m, const KoszulOptions& opts = {}) {
  return koszul_hn(ctx, m, opts).dim;
}

/// Minimal q with H^n(K(f))_{q+n} != 0; `value` empty means smooth.
struct MdrResult {
  std::optional<int> value;
  int q_max = 0;
  std::vector<KoszulRoute> routes;  // one per scanned q

  friend bool operator==(const MdrResult&, const MdrResult&) = default;
};

inline int default_qmax(int n, int d) { return n * d; }

template <Field F>
MdrResult mdr(JacobianContext<F>& ctx, std::optional<int> q_max = std::nullopt, const KoszulOptions& opts = {}) {
  MdrResult out;
  out.q_max = q_max.value_or(default_qmax(ctx.n(), ctx.d()));
  for (int q = 0; q <= out.q_max; ++q) {
    const auto v = koszul_hn(ctx, q + ctx.n(), opts);
    out.routes.push_back(v.route);
    if (v.dim != 0) {
      out.value = q;
      return out;
    }
  }
  if (!coincidence_threshold(ctx)) return out;
  throw Error(ErrorKind::ScanExhausted,
              "no nonzero H^n component for q <= " + std::to_string(out.q_max) + " and f is not smooth");
}

}  // namespace hsurf
