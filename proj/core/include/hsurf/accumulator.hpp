#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hsurf/field.hpp"

namespace hsurf {

/// Rational row stored as integer numerators over one shared denominator.
struct ScaledRow {
  std::vector<mpz_class> num;
  mpz_class den = 1;
};

/// Entry num/den of a ScaledRow, optionally negated; never normalized.
struct ScaledCoeff {
  const mpz_class* num;
  const mpz_class* den;
  bool negate;
};

/// Row storage used by the elimination kernels: plain residues for prime
/// fields, ScaledRow for the rationals.
template <Field F>
struct RowTraits {
  using Row = std::vector<typename F::Element>;
  using Coeff = typename F::Element;
};

template <>
struct RowTraits<RationalField> {
  using Row = ScaledRow;
  using Coeff = ScaledCoeff;
};

inline std::size_t row_size(const std::vector<std::uint32_t>& r) { return r.size(); }
inline std::size_t row_size(const ScaledRow& r) { return r.num.size(); }

template <class Fn>
void for_each_nonzero(const PrimeField& field, const std::vector<std::uint32_t>& r, bool negate, Fn&& fn) {
  for (std::size_t t = 0; t < r.size(); ++t) {
    if (r[t] != 0) fn(t, negate ? field.neg(r[t]) : r[t]);
  }
}

template <class Fn>
void for_each_nonzero(const RationalField&, const ScaledRow& r, bool negate, Fn&& fn) {
  for (std::size_t t = 0; t < r.num.size(); ++t) {
    if (sgn(r.num[t]) != 0) fn(t, ScaledCoeff{&r.num[t], &r.den, negate});
  }
}

inline std::size_t row_nnz(const std::vector<std::uint32_t>& r) {
  return static_cast<std::size_t>(std::count_if(r.begin(), r.end(), [](std::uint32_t x) { return x != 0; }));
}
inline std::size_t row_nnz(const ScaledRow& r) {
  return static_cast<std::size_t>(std::count_if(r.num.begin(), r.num.end(), [](const mpz_class& x) { return sgn(x) != 0; }));
}

inline std::vector<std::uint32_t> row_from_dense(const PrimeField&, std::vector<std::uint32_t> v) { return v; }
inline std::vector<std::uint32_t> dense_from_row(const PrimeField&, const std::vector<std::uint32_t>& r) { return r; }
inline std::vector<std::uint32_t> unit_row(const PrimeField&, std::size_t size, std::size_t j) {
  std::vector<std::uint32_t> r(size, 0);
  r[j] = 1;
  return r;
}
inline std::uint32_t unit_coeff(const PrimeField& field, bool negate) { return negate ? field.neg(1) : 1; }

ScaledRow row_from_dense(const RationalField&, const std::vector<mpq_class>& v);
std::vector<mpq_class> dense_from_row(const RationalField&, const ScaledRow& r);
ScaledRow unit_row(const RationalField&, std::size_t size, std::size_t j);
ScaledCoeff unit_coeff(const RationalField&, bool negate);

/// Dense row workspace for elimination kernels. `add_scaled` is the hot
/// loop of every rank computation; the prime-field version defers
/// reduction so the loop stays branch-light and vectorizable.
template <Field F>
class DenseAccumulator;

template <>
class DenseAccumulator<PrimeField> {
 public:
  using Element = PrimeField::Element;
  using Row = std::vector<Element>;

  DenseAccumulator(const PrimeField& field, std::size_t size)
      : p_(field.modulus()),
        bound_(2 * static_cast<std::uint64_t>(p_) * p_),
        data_(size, 0) {}

  std::size_t size() const noexcept { return data_.size(); }

  void clear() { std::fill(data_.begin(), data_.end(), 0); }

  void add(std::size_t j, Element v) {
    std::uint64_t s = data_[j] + v;
    data_[j] = s >= bound_ ? s - bound_ : s;
  }

  // Entries stay in [0, 2p^2); with p < 2^31 one more product never overflows.
  void add_scaled(Element a, std::span<const Element> src, std::size_t offset) {
    std::uint64_t* d = data_.data() + offset;
    const Element* s = src.data();
    const std::uint64_t aa = a;
    const std::uint64_t bound = bound_;
    const std::size_t n = src.size();
    for (std::size_t t = 0; t < n; ++t) {
      std::uint64_t v = d[t] + aa * s[t];
      d[t] = v >= bound ? v - bound : v;
    }
  }

  void add_row(Element a, const Row& r, std::size_t offset) { add_scaled(a, r, offset); }

  Element value(std::size_t j) {
    data_[j] %= p_;
    return static_cast<Element>(data_[j]);
  }

  std::vector<Element> take() {
    std::vector<Element> out(data_.size());
    for (std::size_t j = 0; j < data_.size(); ++j) {
      out[j] = static_cast<Element>(data_[j] % p_);
      data_[j] = 0;
    }
    return out;
  }

  Row take_row() { return take(); }

 private:
  std::uint32_t p_;
  std::uint64_t bound_;
  std::vector<std::uint64_t> data_;
};

/// Rational rows: integer numerators over one common denominator, so the
/// hot loop is a big-integer multiply-add instead of normalized fractions.
template <>
class DenseAccumulator<RationalField> {
 public:
  using Element = mpq_class;
  using Row = ScaledRow;

  DenseAccumulator(const RationalField&, std::size_t size) : num_(size), den_(1) {}

  std::size_t size() const noexcept { return num_.size(); }

  void clear() {
    for (auto& v : num_) {
      if (sgn(v) != 0) v = 0;
    }
    den_ = 1;
  }

  void add(std::size_t j, const Element& v) {
    if (sgn(v) == 0) return;
    add(j, ScaledCoeff{&v.get_num(), &v.get_den(), false});
  }

  void add(std::size_t j, const ScaledCoeff& c) {
    absorb(*c.den);
    mpz_divexact(tmp_.get_mpz_t(), den_.get_mpz_t(), c.den->get_mpz_t());
    if (c.negate) {
      mpz_submul(num_[j].get_mpz_t(), tmp_.get_mpz_t(), c.num->get_mpz_t());
    } else {
      mpz_addmul(num_[j].get_mpz_t(), tmp_.get_mpz_t(), c.num->get_mpz_t());
    }
  }

  void add_scaled(const Element& a, std::span<const Element> src, std::size_t offset) {
    for (std::size_t t = 0; t < src.size(); ++t) {
      if (sgn(src[t]) != 0) add(offset + t, mpq_class(a * src[t]));
    }
  }

  void add_row(const Element& a, const Row& r, std::size_t offset) {
    if (sgn(a) == 0) return;
    add_row(ScaledCoeff{&a.get_num(), &a.get_den(), false}, r, offset);
  }

  // data[offset + t] += c * r[t]
  void add_row(const ScaledCoeff& c, const Row& r, std::size_t offset) {
    mpz_mul(m_.get_mpz_t(), c.den->get_mpz_t(), r.den.get_mpz_t());
    absorb(m_);
    mpz_divexact(tmp_.get_mpz_t(), den_.get_mpz_t(), m_.get_mpz_t());
    tmp_ *= *c.num;
    if (c.negate) tmp_ = -tmp_;
    for (std::size_t t = 0; t < r.num.size(); ++t) {
      if (sgn(r.num[t]) != 0) mpz_addmul(num_[offset + t].get_mpz_t(), tmp_.get_mpz_t(), r.num[t].get_mpz_t());
    }
  }

  Element value(std::size_t j) const {
    mpq_class q(num_[j], den_);
    q.canonicalize();
    return q;
  }

  Row take_row() {
    Row out;
    mpz_class g = den_;
    for (const auto& v : num_) {
      if (g == 1) break;
      if (sgn(v) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    out.num.resize(num_.size());
    for (std::size_t j = 0; j < num_.size(); ++j) {
      if (sgn(num_[j]) == 0) continue;
      if (g != 1) {
        mpz_divexact(out.num[j].get_mpz_t(), num_[j].get_mpz_t(), g.get_mpz_t());
      } else {
        out.num[j].swap(num_[j]);
      }
      num_[j] = 0;
    }
    if (g != 1) mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    out.den = den_;
    den_ = 1;
    return out;
  }

  std::vector<Element> take() { return dense_from_row(RationalField{}, take_row()); }

 private:
  // Grows the common denominator so that m divides it.
  void absorb(const mpz_class& m) {
    if (mpz_divisible_p(den_.get_mpz_t(), m.get_mpz_t())) return;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), m.get_mpz_t());
    mpz_divexact(scale_.get_mpz_t(), l.get_mpz_t(), den_.get_mpz_t());
    for (auto& v : num_) {
      if (sgn(v) != 0) v *= scale_;
    }
    den_ = std::move(l);
  }

  std::vector<mpz_class> num_;
  mpz_class den_;
  mpz_class tmp_, m_, scale_;
};

}  // namespace hsurf
