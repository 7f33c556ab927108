#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <queue>
#include <span>
#include <vector>

#include "hsurf/accumulator.hpp"
#include "hsurf/error.hpp"
#include "hsurf/field.hpp"
#include "hsurf/polynomial.hpp"

namespace hsurf {

/// Column count above which rank queries switch to sparse elimination.
inline constexpr std::size_t kSparseThreshold = 10000;

template <Field F>
using DenseVector = std::vector<typename F::Element>;

template <Field F>
struct SparseVector {
  std::vector<std::uint32_t> index;  // strictly increasing
  std::vector<typename F::Element> value;

  std::size_t nnz() const noexcept { return index.size(); }
  void push(std::uint32_t i, typename F::Element v) {
    index.push_back(i);
    value.push_back(std::move(v));
  }
};

template <Field F>
SparseVector<F> to_sparse(const F& field, std::span<const typename F::Element> v) {
  SparseVector<F> s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!field.is_zero(v[i])) s.push(static_cast<std::uint32_t>(i), v[i]);
  }
  return s;
}

template <Field F>
DenseVector<F> to_dense(const F& field, const SparseVector<F>& s, std::size_t size) {
  DenseVector<F> v(size, field.zero());
  for (std::size_t t = 0; t < s.nnz(); ++t) v[s.index[t]] = s.value[t];
  return v;
}

/// A linear subspace of F^ambient in reduced row-echelon form: pivots
/// strictly increasing, each pivot entry 1 and alone in its column.
template <Field F>
class SubspaceBasis {
 public:
  using Element = typename F::Element;

  SubspaceBasis(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  // Trusts the caller that rows/pivots are already reduced.
  static SubspaceBasis from_rref(F field, std::size_t ambient, std::vector<DenseVector<F>> rows,
                                 std::vector<std::size_t> pivots) {
    SubspaceBasis b(std::move(field), ambient);
    b.rows_ = std::move(rows);
    b.pivots_ = std::move(pivots);
    return b;
  }

  const F& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<DenseVector<F>>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  std::vector<std::size_t> non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (p < pivots_.size() && pivots_[p] == j) {
        ++p;
      } else {
        out.push_back(j);
      }
    }
    return out;
  }

  // v minus its projection onto the span along the pivot columns; zero on
  // every pivot column afterwards.
  DenseVector<F> reduce(std::span<const Element> v) const {
    check_size(v.size());
    DenseVector<F> r(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Element a = r[pivots_[i]];
      if (field_.is_zero(a)) continue;
      const auto& row = rows_[i];
      for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
        if (!field_.is_zero(row[j])) r[j] = field_.sub(r[j], field_.mul(a, row[j]));
      }
    }
    return r;
  }

  bool contains(std::span<const Element> v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [&](const Element& x) { return field_.is_zero(x); });
  }

  bool contains(const SubspaceBasis& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const auto& row) { return contains(row); });
  }

  // Coordinates of the class of v over the non-pivot columns.
  DenseVector<F> quotient_coordinates(std::span<const Element> v) const {
    auto r = reduce(v);
    DenseVector<F> out;
    out.reserve(ambient_ - pivots_.size());
    for (std::size_t j : non_pivots()) out.push_back(r[j]);
    return out;
  }

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  void check_size(std::size_t n) const {
    if (n != ambient_) throw Error(ErrorKind::InvalidArgument, "vector does not live in the subspace's ambient space");
  }

  F field_;
  std::size_t ambient_;
  std::vector<DenseVector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Incremental Gaussian elimination that always pivots on the earliest
/// nonzero column. Rows are kept semi-reduced (zero before their pivot)
/// until basis() back-substitutes into reduced row-echelon form.
template <Field F>
class Echelonizer {
 public:
  using Element = typename F::Element;

  Echelonizer(F field, std::size_t ambient)
      : field_(std::move(field)), ambient_(ambient), pivot_row_(ambient, -1), acc_(field_, ambient) {}

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  bool insert(std::span<const Element> v) {
    if (v.size() != ambient_) throw Error(ErrorKind::InvalidArgument, "row has the wrong length");
    acc_.clear();
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!field_.is_zero(v[j])) acc_.add(j, v[j]);
    }
    return reduce_and_store();
  }

  bool insert(const SparseVector<F>& v) {
    acc_.clear();
    for (std::size_t t = 0; t < v.nnz(); ++t) {
      if (v.index[t] >= ambient_) throw Error(ErrorKind::InvalidArgument, "row index out of range");
      acc_.add(v.index[t], v.value[t]);
    }
    return reduce_and_store();
  }

  SubspaceBasis<F> basis() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_[a] < pivot_[b]; });
    // full[i] holds the reduced row for order[i]; fill from the last pivot back.
    std::vector<DenseVector<F>> full(rows_.size());
    DenseAccumulator<F> acc(field_, ambient_);
    for (std::size_t oi = order.size(); oi-- > 0;) {
      const std::size_t r = order[oi];
      const std::size_t c = pivot_[r];
      acc.clear();
      const auto& src = rows_[r];
      for (std::size_t t = 0; t < src.size(); ++t) {
        if (!field_.is_zero(src[t])) acc.add(c + t, src[t]);
      }
      for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
        const std::size_t c2 = pivot_[order[oj]];
        const Element a = acc.value(c2);
        if (field_.is_zero(a)) continue;
        acc.add_scaled(field_.neg(a), std::span<const Element>(full[oj]).subspan(c2), c2);
      }
      full[oi] = acc.take();
    }
    std::vector<std::size_t> pivots;
    for (std::size_t r : order) pivots.push_back(pivot_[r]);
    return SubspaceBasis<F>::from_rref(field_, ambient_, std::move(full), std::move(pivots));
  }

 private:
  bool reduce_and_store() {
    for (std::size_t j = 0; j < ambient_; ++j) {
      const Element a = acc_.value(j);
      if (field_.is_zero(a)) continue;
      const long r = pivot_row_[j];
      if (r >= 0) {
        acc_.add_scaled(field_.neg(a), rows_[static_cast<std::size_t>(r)], j);
        continue;
      }
      const Element inv = field_.inv(a);
      DenseVector<F> row(ambient_ - j, field_.zero());
      for (std::size_t t = j; t < ambient_; ++t) {
        const Element x = acc_.value(t);
        if (!field_.is_zero(x)) row[t - j] = field_.mul(inv, x);
      }
      pivot_row_[j] = static_cast<long>(rows_.size());
      pivot_.push_back(j);
      rows_.push_back(std::move(row));
      return true;
    }
    return false;
  }

  F field_;
  std::size_t ambient_;
  std::vector<long> pivot_row_;
  std::vector<std::size_t> pivot_;
  std::vector<DenseVector<F>> rows_;  // rows_[r][t] is the entry at column pivot_[r] + t
  DenseAccumulator<F> acc_;
};

/// Fraction-free variant for the rationals: rows are primitive integer
/// vectors and elimination cross-multiplies, so no denominators appear and
/// entry growth stays bounded by the content division.
template <>
class Echelonizer<RationalField> {
 public:
  using Element = mpq_class;

  Echelonizer(RationalField field, std::size_t ambient) : field_(field), ambient_(ambient), pivot_row_(ambient, -1) {}

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  bool insert(std::span<const Element> v) {
    if (v.size() != ambient_) throw Error(ErrorKind::InvalidArgument, "row has the wrong length");
    return reduce_and_store(integral(v));
  }

  bool insert(const SparseVector<RationalField>& v) {
    DenseVector<RationalField> d(ambient_, 0);
    for (std::size_t t = 0; t < v.nnz(); ++t) {
      if (v.index[t] >= ambient_) throw Error(ErrorKind::InvalidArgument, "row index out of range");
      d[v.index[t]] = v.value[t];
    }
    return reduce_and_store(integral(d));
  }

  bool insert(const ScaledRow& v) {
    if (v.num.size() != ambient_) throw Error(ErrorKind::InvalidArgument, "row has the wrong length");
    return reduce_and_store(v.num);
  }

  SubspaceBasis<RationalField> basis() const;

 private:
  static std::vector<mpz_class> integral(std::span<const Element> v);
  static void make_primitive(std::vector<mpz_class>& w, std::size_t from);
  bool reduce_and_store(std::vector<mpz_class> w);

  RationalField field_;
  std::size_t ambient_;
  std::vector<long> pivot_row_;
  std::vector<std::size_t> pivot_;
  std::vector<std::vector<mpz_class>> rows_;  // full length, zero before the pivot
};

/// Reduced echelon basis of the span of `vectors`, each of length `ambient`.
template <Field F>
SubspaceBasis<F> echelon_span(const F& field, std::size_t ambient, const std::vector<DenseVector<F>>& vectors) {
  Echelonizer<F> e(field, ambient);
  for (const auto& v : vectors) e.insert(v);
  return e.basis();
}

template <Field F>
SubspaceBasis<F> echelon_span(const F& field, std::size_t ambient, const std::vector<SparseVector<F>>& vectors) {
  Echelonizer<F> e(field, ambient);
  for (const auto& v : vectors) e.insert(v);
  return e.basis();
}

/// Rank of a set of sparse rows via elimination that picks, inside each new
/// row, the column with the fewest entries across the input (ties to the
/// earliest column). Rows are processed sparsest first.
template <Field F>
std::size_t sparse_rank(const F& field, std::size_t ambient, std::vector<SparseVector<F>> rows) {
  using Element = typename F::Element;
  std::vector<std::uint32_t> colcount(ambient, 0);
  for (const auto& r : rows) {
    for (auto i : r.index) {
      if (i >= ambient) throw Error(ErrorKind::InvalidArgument, "row index out of range");
      ++colcount[i];
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.nnz() < b.nnz(); });

  std::vector<SparseVector<F>> piv_rows;  // pivot entry normalized to one
  std::vector<std::uint32_t> piv_col;
  std::vector<long> col_piv(ambient, -1);
  DenseVector<F> scratch(ambient, field.zero());
  std::vector<char> touched(ambient, 0);
  std::vector<std::uint32_t> touched_list;

  for (auto& row : rows) {
    touched_list.clear();
    std::priority_queue<long, std::vector<long>, std::greater<>> heap;
    auto touch = [&](std::uint32_t c) {
      if (!touched[c]) {
        touched[c] = 1;
        touched_list.push_back(c);
      }
      if (col_piv[c] >= 0) heap.push(col_piv[c]);
    };
    for (std::size_t t = 0; t < row.nnz(); ++t) {
      scratch[row.index[t]] = row.value[t];
      touch(row.index[t]);
    }
    long last = -1;
    while (!heap.empty()) {
      const long k = heap.top();
      heap.pop();
      if (k == last) continue;
      last = k;
      const auto& pr = piv_rows[static_cast<std::size_t>(k)];
      const Element a = scratch[piv_col[static_cast<std::size_t>(k)]];
      if (field.is_zero(a)) continue;
      const Element na = field.neg(a);
      for (std::size_t t = 0; t < pr.nnz(); ++t) {
        const auto c = pr.index[t];
        scratch[c] = field.add(scratch[c], field.mul(na, pr.value[t]));
        if (!touched[c] || col_piv[c] > k) touch(c);
      }
    }
    std::sort(touched_list.begin(), touched_list.end());
    SparseVector<F> out;
    long best = -1;
    for (auto c : touched_list) {
      if (!field.is_zero(scratch[c])) {
        out.push(c, scratch[c]);
        if (best < 0 || colcount[c] < colcount[static_cast<std::size_t>(best)]) best = c;
      }
      scratch[c] = field.zero();
      touched[c] = 0;
    }
    if (best < 0) continue;
    const auto bc = static_cast<std::uint32_t>(best);
    Element inv{};
    for (std::size_t t = 0; t < out.nnz(); ++t) {
      if (out.index[t] == bc) inv = field.inv(out.value[t]);
    }
    for (auto& v : out.value) v = field.mul(v, inv);
    col_piv[bc] = static_cast<long>(piv_rows.size());
    piv_col.push_back(bc);
    piv_rows.push_back(std::move(out));
  }
  return piv_rows.size();
}

template <Field F>
std::size_t rank(const F& field, std::size_t ambient, const std::vector<SparseVector<F>>& rows) {
  if (ambient >= kSparseThreshold) return sparse_rank(field, ambient, rows);
  Echelonizer<F> e(field, ambient);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

/// Matrix of a linear map between graded pieces, assembled column by column
/// (the image of each source basis vector).
template <Field F>
class LinearMap {
 public:
  using Element = typename F::Element;

  LinearMap(F field, std::size_t target_dim, std::size_t source_dim)
      : field_(std::move(field)), rows_(target_dim), cols_(source_dim) {
    columns_.reserve(source_dim);
  }

  const F& field() const noexcept { return field_; }
  std::size_t target_dim() const noexcept { return rows_; }
  std::size_t source_dim() const noexcept { return cols_; }
  const std::vector<SparseVector<F>>& columns() const noexcept { return columns_; }

  void push_column(SparseVector<F> c) {
    if (columns_.size() == cols_) throw Error(ErrorKind::InvalidArgument, "too many columns");
    if (!c.index.empty() && c.index.back() >= rows_) throw Error(ErrorKind::InvalidArgument, "column index out of range");
    columns_.push_back(std::move(c));
  }

  Element entry(std::size_t r, std::size_t c) const {
    const auto& col = columns_.at(c);
    auto it = std::lower_bound(col.index.begin(), col.index.end(), r);
    if (it == col.index.end() || *it != r) return field_.zero();
    return col.value[static_cast<std::size_t>(it - col.index.begin())];
  }

  std::vector<SparseVector<F>> sparse_rows() const {
    std::vector<SparseVector<F>> out(rows_);
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      const auto& col = columns_[c];
      for (std::size_t t = 0; t < col.nnz(); ++t) out[col.index[t]].push(static_cast<std::uint32_t>(c), col.value[t]);
    }
    return out;
  }

  DenseVector<F> apply(std::span<const Element> v) const {
    if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "vector length differs from the source dimension");
    DenseVector<F> out(rows_, field_.zero());
    for (std::size_t c = 0; c < cols_; ++c) {
      if (field_.is_zero(v[c])) continue;
      const auto& col = columns_[c];
      for (std::size_t t = 0; t < col.nnz(); ++t) {
        out[col.index[t]] = field_.add(out[col.index[t]], field_.mul(v[c], col.value[t]));
      }
    }
    return out;
  }

  // Rank of the column set; the sparse path kicks in for wide matrices.
  std::size_t rank() const {
    if (cols_ < rows_) return hsurf::rank(field_, cols_, sparse_rows());
    return hsurf::rank(field_, rows_, columns_);
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparseVector<F>> columns_;
};

/// Basis of {v : M v = 0}.
template <Field F>
SubspaceBasis<F> kernel_basis(const LinearMap<F>& m) {
  const F& field = m.field();
  const std::size_t n = m.source_dim();
  const auto rref = echelon_span(field, n, m.sparse_rows());
  std::vector<DenseVector<F>> kernel;
  std::size_t p = 0;
  const auto& piv = rref.pivots();
  for (std::size_t f = 0; f < n; ++f) {
    if (p < piv.size() && piv[p] == f) {
      ++p;
      continue;
    }
    DenseVector<F> v(n, field.zero());
    v[f] = field.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = field.neg(rref.rows()[r][f]);
    kernel.push_back(std::move(v));
  }
  return echelon_span(field, n, kernel);
}

/// Matrix of S_a -> S_{a + deg g}, v -> g v, in monomial coordinates.
template <Field F>
LinearMap<F> multiplication_map(const Polynomial<F>& g, int a) {
  if (a < 0) throw Error(ErrorKind::InvalidArgument, "negative source degree");
  const int n = g.n();
  MonomialIndexer src(n + 1, a);
  MonomialIndexer dst(n + 1, a + g.degree());
  LinearMap<F> m(g.field(), dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    const Monomial mono = src.monomial(c);
    std::vector<std::pair<std::uint32_t, typename F::Element>> entries;
    for (const auto& t : g.terms()) entries.emplace_back(static_cast<std::uint32_t>(dst.index(t.monomial * mono)), t.coeff);
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVector<F> col;
    for (auto& [i, v] : entries) col.push(i, v);
    m.push_column(std::move(col));
  }
  return m;
}

}  // namespace hsurf
