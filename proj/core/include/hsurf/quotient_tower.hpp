#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "hsurf/accumulator.hpp"
#include "hsurf/linalg.hpp"
#include "hsurf/polynomial.hpp"

namespace hsurf {

/// Coefficient of t^k in ((1 - t^(d-1)) / (1 - t))^(n+1): the Hilbert
/// function of the Milnor algebra of a smooth degree-d hypersurface.
std::uint64_t smooth_reference_dim(int n, int d, int k);

/// Graded pieces of A = S/J(f), built one degree at a time.
///
/// Degree k stores its standard monomials (the non-leading monomials of
/// J(f)_k under deglex) and, for every variable x_i and standard monomial s
/// of degree k-1, the class of x_i*s in A_k. Degree k+1 is obtained from
/// A_k (x) V modulo the images of s (x) (x_i ^ x_j) for standard s of degree
/// k-1, which presents A_{k+1} once k >= d-1. Most relations have one side
/// already standard and directly rewrite a leading monomial; only the rest
/// need elimination, and that stops as soon as the rank reaches the bound
/// allowed by the smooth reference dimension.
template <Field F>
class QuotientTower {
 public:
  using Element = typename F::Element;
  using Row = typename RowTraits<F>::Row;
  using Coeff = typename RowTraits<F>::Coeff;

  struct StepStats {
    std::size_t candidates = 0;  // distinct monomials x_i * s, s standard
    std::size_t unresolved = 0;  // candidates not rewritten by a one-sided relation
    std::size_t relations_used = 0;
    std::size_t relations_total = 0;
  };

  struct Degree {
    int k = 0;
    std::vector<Monomial> standard;  // largest first
    std::vector<std::int32_t> lookup;  // rank in S_k -> standard index, or -1
    // mul[i][s]: class of x_i * standard(k-1)[s]; >= 0 is a standard index,
    // < 0 encodes row -(code+1) of nf_rows.
    std::vector<std::vector<std::int32_t>> mul;
    std::vector<Row> nf_rows;
    StepStats stats;
  };

  explicit QuotientTower(const Polynomial<F>& f) : field_(f.field()), n_(f.n()), d_(f.degree()) {
    if (d_ < 2) throw Error(ErrorKind::DegreeTooSmall, "the Jacobian ideal needs deg f >= 2");
    for (int i = 0; i <= n_; ++i) partials_.push_back(f.partial(i));
  }

  QuotientTower(const QuotientTower&) = delete;
  QuotientTower& operator=(const QuotientTower&) = delete;

  const F& field() const noexcept { return field_; }
  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }

  const Degree& degree(int k) {
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
    std::lock_guard lock(mutex_);
    while (static_cast<int>(degrees_.size()) <= k) build_next();
    return *degrees_[static_cast<std::size_t>(k)];
  }

  std::size_t dim(int k) { return degree(k).standard.size(); }

  // Coordinates of the class of m over standard(deg m).
  DenseVector<F> normal_form(const Monomial& m) {
    degree(m.degree());
    std::lock_guard lock(mutex_);
    return dense_from_row(field_, normal_form_locked(m));
  }

  DenseVector<F> normal_form(const Polynomial<F>& g) {
    const auto& deg = degree(g.degree());
    std::lock_guard lock(mutex_);
    DenseAccumulator<F> acc(field_, deg.standard.size());
    for (const auto& t : g.terms()) acc.add_row(t.coeff, normal_form_locked(t.monomial), 0);
    return acc.take();
  }

  // Same, for a coordinate vector over monomial_basis(n, k).
  DenseVector<F> normal_form(std::span<const Element> coords, int k) {
    const auto& deg = degree(k);
    MonomialIndexer idx(n_ + 1, k);
    if (coords.size() != idx.size()) throw Error(ErrorKind::InvalidArgument, "coordinate vector has the wrong length");
    std::lock_guard lock(mutex_);
    DenseAccumulator<F> acc(field_, deg.standard.size());
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (!field_.is_zero(coords[j])) acc.add_row(coords[j], normal_form_locked(idx.monomial(j)), 0);
    }
    return acc.take();
  }

 private:
  Row class_row(const Degree& deg, std::int32_t code) const {
    if (code >= 0) return unit_row(field_, deg.standard.size(), static_cast<std::size_t>(code));
    return deg.nf_rows[static_cast<std::size_t>(-code - 1)];
  }

  Row normal_form_locked(const Monomial& m) {
    const int k = m.degree();
    const Degree& deg = *degrees_[static_cast<std::size_t>(k)];
    MonomialIndexer idx(n_ + 1, k);
    const std::size_t r = idx.index(m);
    if (deg.lookup[r] >= 0) return class_row(deg, deg.lookup[r]);
    auto& memo = memo_[k];
    if (auto it = memo.find(r); it != memo.end()) return it->second;
    int i = 0;
    while (m[i] == 0) ++i;
    const Row below = normal_form_locked(m.divided_by_variable(i));
    DenseAccumulator<F> acc(field_, deg.standard.size());
    for_each_nonzero(field_, below, false, [&](std::size_t t, const Coeff& c) {
      const std::int32_t code = deg.mul[static_cast<std::size_t>(i)][t];
      if (code >= 0) {
        acc.add(static_cast<std::size_t>(code), c);
      } else {
        acc.add_row(c, deg.nf_rows[static_cast<std::size_t>(-code - 1)], 0);
      }
    });
    auto out = acc.take_row();
    memo.emplace(r, out);
    return out;
  }

  void build_next() {
    const int k = static_cast<int>(degrees_.size());
    if (k <= d_ - 2) {
      build_free(k);
    } else if (k == d_ - 1) {
      build_generators();
    } else {
      build_step(k);
    }
  }

  // Below the generators every monomial is standard.
  void build_free(int k) {
    auto deg = std::make_unique<Degree>();
    deg->k = k;
    deg->standard = monomial_basis(n_, k);
    deg->lookup.resize(deg->standard.size());
    for (std::size_t j = 0; j < deg->standard.size(); ++j) deg->lookup[j] = static_cast<std::int32_t>(j);
    if (k > 0) {
      MonomialIndexer idx(n_ + 1, k);
      const auto& prev = degrees_[static_cast<std::size_t>(k - 1)]->standard;
      deg->mul.assign(static_cast<std::size_t>(n_ + 1), std::vector<std::int32_t>(prev.size()));
      for (int i = 0; i <= n_; ++i) {
        for (std::size_t s = 0; s < prev.size(); ++s) {
          deg->mul[static_cast<std::size_t>(i)][s] = static_cast<std::int32_t>(idx.index(prev[s].times_variable(i)));
        }
      }
    }
    degrees_.push_back(std::move(deg));
  }

  // Degree d-1: J is spanned by the partials themselves.
  void build_generators() {
    const int k = d_ - 1;
    MonomialIndexer idx(n_ + 1, k);
    std::vector<DenseVector<F>> gens;
    for (const auto& p : partials_) gens.push_back(p.coordinates());
    const auto rref = echelon_span(field_, idx.size(), gens);
    std::vector<std::int32_t> code(idx.size());
    auto deg = std::make_unique<Degree>();
    deg->k = k;
    deg->lookup.assign(idx.size(), -1);
    const auto free = rref.non_pivots();
    for (std::size_t j = 0; j < free.size(); ++j) {
      deg->standard.push_back(idx.monomial(free[j]));
      deg->lookup[free[j]] = static_cast<std::int32_t>(j);
      code[free[j]] = static_cast<std::int32_t>(j);
    }
    for (std::size_t r = 0; r < rref.dim(); ++r) {
      DenseVector<F> v(free.size(), field_.zero());
      for (std::size_t j = 0; j < free.size(); ++j) v[j] = field_.neg(rref.rows()[r][free[j]]);
      code[rref.pivots()[r]] = -static_cast<std::int32_t>(deg->nf_rows.size()) - 1;
      deg->nf_rows.push_back(row_from_dense(field_, std::move(v)));
    }
    const auto& prev = degrees_[static_cast<std::size_t>(k - 1)]->standard;
    deg->mul.assign(static_cast<std::size_t>(n_ + 1), std::vector<std::int32_t>(prev.size()));
    for (int i = 0; i <= n_; ++i) {
      for (std::size_t s = 0; s < prev.size(); ++s) {
        deg->mul[static_cast<std::size_t>(i)][s] = code[idx.index(prev[s].times_variable(i))];
      }
    }
    degrees_.push_back(std::move(deg));
  }

  // Degree k from degrees k-1 and k-2 (k-1 >= d-1).
  void build_step(int k) {
    const Degree& cur = *degrees_[static_cast<std::size_t>(k - 1)];
    const Degree& low = *degrees_[static_cast<std::size_t>(k - 2)];
    const std::size_t nv = static_cast<std::size_t>(n_ + 1);
    const std::size_t qk = cur.standard.size();
    MonomialIndexer idx(n_ + 1, k);

    // Candidates x_i * s, indexed in monomial order (largest first).
    std::vector<std::int32_t> cpos(idx.size(), -1);
    std::vector<std::vector<std::int32_t>> cx(nv, std::vector<std::int32_t>(qk));
    std::vector<std::size_t> ranks;
    ranks.reserve(nv * qk);
    for (std::size_t i = 0; i < nv; ++i) {
      for (std::size_t a = 0; a < qk; ++a) ranks.push_back(idx.index(cur.standard[a].times_variable(static_cast<int>(i))));
    }
    std::vector<std::size_t> sorted = ranks;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t c = 0; c < sorted.size(); ++c) cpos[sorted[c]] = static_cast<std::int32_t>(c);
    for (std::size_t i = 0; i < nv; ++i) {
      for (std::size_t a = 0; a < qk; ++a) cx[i][a] = cpos[ranks[i * qk + a]];
    }
    const std::size_t nc = sorted.size();

    auto code_nnz = [&](std::int32_t code) { return row_nnz(cur.nf_rows[static_cast<std::size_t>(-code - 1)]); };

    // One-sided relations x_i * t = x_v * NF(u): pick the sparsest per lead.
    struct Rewrite {
      std::int32_t var = -1;
      std::int32_t code = 0;  // class of u in A_{k-1}
      std::size_t nnz = 0;
      std::size_t origin = 0;
    };
    struct Relation {
      std::int32_t s, i, j;
    };
    std::vector<Rewrite> rewrite(nc);
    std::vector<Relation> relations;
    const std::size_t qlow = low.standard.size();
    for (std::size_t s = 0; s < qlow; ++s) {
      for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = i + 1; j < nv; ++j) {
          const std::int32_t a = cur.mul[i][s];
          const std::int32_t b = cur.mul[j][s];
          if (a >= 0 && b >= 0) continue;  // x_j*(x_i s) and x_i*(x_j s) are the same candidate
          const std::size_t id = relations.size();
          relations.push_back({static_cast<std::int32_t>(s), static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)});
          if (a >= 0 || b >= 0) {
            // lead x_i*t with t = x_j s standard, or x_j*t with t = x_i s standard
            const std::size_t lead = b >= 0 ? static_cast<std::size_t>(cx[i][static_cast<std::size_t>(b)])
                                            : static_cast<std::size_t>(cx[j][static_cast<std::size_t>(a)]);
            Rewrite rw{b >= 0 ? static_cast<std::int32_t>(j) : static_cast<std::int32_t>(i), b >= 0 ? a : b, 0, id};
            rw.nnz = code_nnz(rw.code);
            if (rewrite[lead].var < 0 || rw.nnz < rewrite[lead].nnz) rewrite[lead] = rw;
          }
        }
      }
    }
    std::vector<char> used(relations.size(), 0);
    std::vector<std::int32_t> upos(nc, -1);
    std::size_t nu = 0;
    for (std::size_t c = 0; c < nc; ++c) {
      if (rewrite[c].var >= 0) {
        used[rewrite[c].origin] = 1;
      } else {
        upos[c] = static_cast<std::int32_t>(nu++);
      }
    }

    // Express every candidate over the unresolved ones, smallest first.
    std::vector<Row> nfu(nc);
    DenseAccumulator<F> acc(field_, nu);
    auto add_candidate = [&](const Coeff& e, std::size_t c) {
      if (upos[c] >= 0) {
        acc.add(static_cast<std::size_t>(upos[c]), e);
      } else {
        acc.add_row(e, nfu[c], 0);
      }
    };
    // adds +-x_v * (class code of degree k-1)
    auto add_product = [&](bool negate, std::size_t v, std::int32_t code) {
      if (code >= 0) {
        add_candidate(unit_coeff(field_, negate), static_cast<std::size_t>(cx[v][static_cast<std::size_t>(code)]));
        return;
      }
      for_each_nonzero(field_, cur.nf_rows[static_cast<std::size_t>(-code - 1)], negate,
                       [&](std::size_t t, const Coeff& e) { add_candidate(e, static_cast<std::size_t>(cx[v][t])); });
    };
    for (std::size_t c = nc; c-- > 0;) {
      if (upos[c] >= 0) continue;
      acc.clear();
      add_product(false, static_cast<std::size_t>(rewrite[c].var), rewrite[c].code);
      nfu[c] = acc.take_row();
    }

    // Remaining relations x_j * [x_i s] - x_i * [x_j s], reduced over U.
    const std::uint64_t ref = smooth_reference_dim(n_, d_, k);
    const std::size_t target = nu > ref ? nu - static_cast<std::size_t>(ref) : 0;
    Echelonizer<F> ech(field_, nu);
    StepStats stats;
    stats.candidates = nc;
    stats.unresolved = nu;
    stats.relations_total = relations.size();
    for (std::size_t r = 0; r < relations.size() && ech.rank() < target; ++r) {
      if (used[r]) continue;
      const auto& rel = relations[r];
      acc.clear();
      add_product(false, static_cast<std::size_t>(rel.j), cur.mul[static_cast<std::size_t>(rel.i)][static_cast<std::size_t>(rel.s)]);
      add_product(true, static_cast<std::size_t>(rel.i), cur.mul[static_cast<std::size_t>(rel.j)][static_cast<std::size_t>(rel.s)]);
      ech.insert(acc.take_row());
      ++stats.relations_used;
    }
    const auto rref = ech.basis();

    // Standard monomials are the unresolved candidates that are not pivots.
    auto deg = std::make_unique<Degree>();
    deg->k = k;
    deg->stats = stats;
    deg->lookup.assign(idx.size(), -1);
    std::vector<std::int32_t> ucode(nu, 0);  // standard index, or -(pivot row + 1)
    {
      std::size_t p = 0;
      const auto& piv = rref.pivots();
      std::size_t u = 0;
      for (std::size_t c = 0; c < nc; ++c) {
        if (upos[c] < 0) continue;
        if (p < piv.size() && piv[p] == u) {
          ucode[u] = -static_cast<std::int32_t>(p) - 1;
          ++p;
        } else {
          ucode[u] = static_cast<std::int32_t>(deg->standard.size());
          deg->lookup[sorted[c]] = ucode[u];
          deg->standard.push_back(idx.monomial(sorted[c]));
        }
        ++u;
      }
    }
    const std::size_t q = deg->standard.size();
    std::vector<Row> pivot_nf(rref.dim());
    for (std::size_t p = 0; p < rref.dim(); ++p) {
      DenseVector<F> v(q, field_.zero());
      for (std::size_t u = 0; u < nu; ++u) {
        if (ucode[u] >= 0) v[static_cast<std::size_t>(ucode[u])] = field_.neg(rref.rows()[p][u]);
      }
      pivot_nf[p] = row_from_dense(field_, std::move(v));
    }
    std::vector<std::int32_t> ccode(nc);
    DenseAccumulator<F> out(field_, q);
    for (std::size_t c = 0; c < nc; ++c) {
      if (upos[c] >= 0) {
        const std::int32_t uc = ucode[static_cast<std::size_t>(upos[c])];
        if (uc >= 0) {
          ccode[c] = uc;
          continue;
        }
        ccode[c] = -static_cast<std::int32_t>(deg->nf_rows.size()) - 1;
        deg->nf_rows.push_back(pivot_nf[static_cast<std::size_t>(-uc - 1)]);
        continue;
      }
      out.clear();
      for_each_nonzero(field_, nfu[c], false, [&](std::size_t u, const Coeff& e) {
        const std::int32_t uc = ucode[u];
        if (uc >= 0) {
          out.add(static_cast<std::size_t>(uc), e);
        } else {
          out.add_row(e, pivot_nf[static_cast<std::size_t>(-uc - 1)], 0);
        }
      });
      ccode[c] = -static_cast<std::int32_t>(deg->nf_rows.size()) - 1;
      deg->nf_rows.push_back(out.take_row());
      nfu[c] = Row();
    }
    deg->mul.assign(nv, std::vector<std::int32_t>(qk));
    for (std::size_t i = 0; i < nv; ++i) {
      for (std::size_t a = 0; a < qk; ++a) deg->mul[i][a] = ccode[static_cast<std::size_t>(cx[i][a])];
    }
    degrees_.push_back(std::move(deg));
  }

  F field_;
  int n_;
  int d_;
  std::vector<Polynomial<F>> partials_;
  std::vector<std::unique_ptr<Degree>> degrees_;
  std::unordered_map<int, std::unordered_map<std::size_t, Row>> memo_;
  std::mutex mutex_;
};

}  // namespace hsurf
