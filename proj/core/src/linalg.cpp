#include "hsurf/linalg.hpp"

namespace hsurf {

ScaledRow row_from_dense(const RationalField&, const std::vector<mpq_class>& v) {
  ScaledRow r;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_lcm(r.den.get_mpz_t(), r.den.get_mpz_t(), x.get_den_mpz_t());
  }
  r.num.resize(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j]) != 0) r.num[j] = v[j].get_num() * (r.den / v[j].get_den());
  }
  return r;
}

std::vector<mpq_class> dense_from_row(const RationalField&, const ScaledRow& r) {
  std::vector<mpq_class> out(r.num.size());
  for (std::size_t j = 0; j < r.num.size(); ++j) {
    if (sgn(r.num[j]) == 0) continue;
    out[j] = mpq_class(r.num[j], r.den);
    out[j].canonicalize();
  }
  return out;
}

ScaledRow unit_row(const RationalField&, std::size_t size, std::size_t j) {
  ScaledRow r;
  r.num.resize(size);
  r.num[j] = 1;
  return r;
}

ScaledCoeff unit_coeff(const RationalField&, bool negate) {
  static const mpz_class one = 1;
  return ScaledCoeff{&one, &one, negate};
}

std::vector<mpz_class> Echelonizer<RationalField>::integral(std::span<const Element> v) {
  mpz_class lcm = 1;
  for (const auto& x : v) {
    if (sgn(x) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<mpz_class> w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j]) != 0) w[j] = v[j].get_num() * (lcm / v[j].get_den());
  }
  return w;
}

void Echelonizer<RationalField>::make_primitive(std::vector<mpz_class>& w, std::size_t from) {
  mpz_class g = 0;
  for (std::size_t j = from; j < w.size(); ++j) {
    if (sgn(w[j]) != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[j].get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g <= 1) return;
  for (std::size_t j = from; j < w.size(); ++j) {
    if (sgn(w[j]) != 0) mpz_divexact(w[j].get_mpz_t(), w[j].get_mpz_t(), g.get_mpz_t());
  }
}

bool Echelonizer<RationalField>::reduce_and_store(std::vector<mpz_class> w) {
  mpz_class a, b;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (sgn(w[j]) == 0) continue;
    const long r = pivot_row_[j];
    if (r < 0) {
      make_primitive(w, j);
      if (sgn(w[j]) < 0) {
        for (std::size_t t = j; t < ambient_; ++t) w[t] = -w[t];
      }
      pivot_row_[j] = static_cast<long>(rows_.size());
      pivot_.push_back(j);
      rows_.push_back(std::move(w));
      return true;
    }
    // w <- (p/g) w - (w_j/g) row, g = gcd(p, w_j)
    const auto& row = rows_[static_cast<std::size_t>(r)];
    mpz_class g = gcd(row[j], w[j]);
    a = row[j] / g;
    b = w[j] / g;
    for (std::size_t t = j; t < ambient_; ++t) {
      if (sgn(row[t]) == 0) {
        if (sgn(w[t]) != 0) w[t] *= a;
      } else {
        w[t] = a * w[t] - b * row[t];
      }
    }
    make_primitive(w, j + 1);
  }
  return false;
}

SubspaceBasis<RationalField> Echelonizer<RationalField>::basis() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return pivot_[x] < pivot_[y]; });
  std::vector<std::vector<mpz_class>> full(rows_.size());
  mpz_class a, b;
  for (std::size_t oi = order.size(); oi-- > 0;) {
    std::vector<mpz_class> w = rows_[order[oi]];
    for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
      const std::size_t c2 = pivot_[order[oj]];
      if (sgn(w[c2]) == 0) continue;
      const auto& row = full[oj];
      mpz_class g = gcd(row[c2], w[c2]);
      a = row[c2] / g;
      b = w[c2] / g;
      for (std::size_t t = 0; t < ambient_; ++t) {
        if (sgn(row[t]) == 0) {
          if (sgn(w[t]) != 0) w[t] *= a;
        } else {
          w[t] = a * w[t] - b * row[t];
        }
      }
      make_primitive(w, 0);
    }
    full[oi] = std::move(w);
  }
  std::vector<DenseVector<RationalField>> rows;
  std::vector<std::size_t> pivots;
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const std::size_t c = pivot_[order[oi]];
    const mpz_class& lead = full[oi][c];
    DenseVector<RationalField> q(ambient_);
    for (std::size_t t = 0; t < ambient_; ++t) {
      if (sgn(full[oi][t]) != 0) {
        q[t] = mpq_class(full[oi][t], lead);
        q[t].canonicalize();
      }
    }
    rows.push_back(std::move(q));
    pivots.push_back(c);
  }
  return SubspaceBasis<RationalField>::from_rref(field_, ambient_, std::move(rows), std::move(pivots));
}

}  // namespace hsurf
