#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hsurf/error.hpp"
#include "hsurf/field.hpp"
#include "hsurf/monomial.hpp"

namespace hsurf {

/// A homogeneous polynomial in x0..xn over the field F.
///
/// Terms are stored largest monomial first, with no zero coefficients and
/// every monomial of the polynomial's degree. The zero polynomial keeps its
/// degree tag so graded bookkeeping never loses track of which S_k it is in.
template <Field F>
class Polynomial {
 public:
  using Element = typename F::Element;
  struct Term {
    Monomial monomial;
    Element coeff;
  };

  Polynomial(F field, int n, int degree) : field_(std::move(field)), n_(n), degree_(degree) {
    if (n < 0 || n + 1 > kMaxVariables) throw Error(ErrorKind::InvalidArgument, "ambient dimension out of range");
    if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  }

  // Combines like terms and drops zeros; every monomial must have `degree`.
  static Polynomial from_terms(F field, int n, int degree, std::vector<Term> terms) {
    Polynomial p(std::move(field), n, degree);
    std::map<Monomial, Element, std::greater<>> acc;
    for (auto& t : terms) {
      if (t.monomial.num_variables() != n + 1) {
        throw Error(ErrorKind::InvalidArgument, "monomial has the wrong number of variables");
      }
      if (t.monomial.degree() != degree) {
        throw Error(ErrorKind::MixedDegree, "term " + t.monomial.to_string() + " has degree " +
                                                std::to_string(t.monomial.degree()) + ", expected " +
                                                std::to_string(degree));
      }
      auto [it, inserted] = acc.try_emplace(t.monomial, t.coeff);
      if (!inserted) it->second = p.field_.add(it->second, t.coeff);
    }
    for (auto& [m, c] : acc) {
      if (!p.field_.is_zero(c)) p.terms_.push_back({m, c});
    }
    return p;
  }

  static Polynomial monomial(F field, const Monomial& m, Element c) {
    return from_terms(std::move(field), m.num_variables() - 1, m.degree(), {{m, std::move(c)}});
  }

  static Polynomial from_coordinates(F field, int n, int degree, std::span<const Element> coords) {
    MonomialIndexer idx(n + 1, degree);
    if (coords.size() != idx.size()) throw Error(ErrorKind::InvalidArgument, "coordinate vector has the wrong length");
    Polynomial p(std::move(field), n, degree);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!p.field_.is_zero(coords[i])) p.terms_.push_back({idx.monomial(i), coords[i]});
    }
    return p;
  }

  const F& field() const noexcept { return field_; }
  int n() const noexcept { return n_; }
  int num_variables() const noexcept { return n_ + 1; }
  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  Element coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
      if (t.monomial == m) return t.coeff;
    }
    return field_.zero();
  }

  Polynomial scaled(const Element& c) const {
    Polynomial p(field_, n_, degree_);
    if (field_.is_zero(c)) return p;
    for (const auto& t : terms_) p.terms_.push_back({t.monomial, field_.mul(c, t.coeff)});
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    std::vector<Term> all(a.terms_.begin(), a.terms_.end());
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return from_terms(a.field_, a.n_, a.degree_, std::move(all));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + b.scaled(a.field_.neg(a.field_.one()));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::InvalidArgument, "polynomials live in different rings");
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, a.field_.mul(s.coeff, t.coeff)});
    }
    return from_terms(a.field_, a.n_, a.degree_ + b.degree_, std::move(prod));
  }

  Polynomial times_monomial(const Monomial& m) const {
    Polynomial p(field_, n_, degree_ + m.degree());
    for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff});
    return p;  // multiplication by a monomial preserves the term order
  }

  // d/dx_i; the result has degree d-1 and may be zero.
  Polynomial partial(int i) const {
    if (degree_ < 1) throw Error(ErrorKind::InvalidArgument, "derivative of a constant");
    if (i < 0 || i > n_) throw Error(ErrorKind::UnknownVariable, "no variable x" + std::to_string(i));
    std::vector<Term> out;
    for (const auto& t : terms_) {
      const int e = t.monomial[i];
      if (e == 0) continue;
      out.push_back({t.monomial.divided_by_variable(i), field_.mul(field_.from_integer(e), t.coeff)});
    }
    return from_terms(field_, n_, degree_ - 1, std::move(out));
  }

  Element evaluate(std::span<const Element> point) const {
    if (point.size() != static_cast<std::size_t>(n_ + 1)) {
      throw Error(ErrorKind::InvalidArgument, "point has the wrong number of coordinates");
    }
    Element sum = field_.zero();
    for (const auto& t : terms_) {
      Element v = t.coeff;
      for (int i = 0; i <= n_; ++i) {
        for (int e = 0; e < t.monomial[i]; ++e) v = field_.mul(v, point[static_cast<std::size_t>(i)]);
      }
      sum = field_.add(sum, v);
    }
    return sum;
  }

  // Dense coordinates over monomial_basis(n, degree).
  std::vector<Element> coordinates() const {
    MonomialIndexer idx(n_ + 1, degree_);
    std::vector<Element> v(idx.size(), field_.zero());
    for (const auto& t : terms_) v[idx.index(t.monomial)] = t.coeff;
    return v;
  }

  template <Field G>
  Polynomial<G> convert(const G& target) const
    requires std::same_as<F, RationalField>
  {
    std::vector<typename Polynomial<G>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.monomial, target.from_rational(t.coeff)});
    return Polynomial<G>::from_terms(target, n_, degree_, std::move(out));
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      std::string c = field_.to_string(terms_[i].coeff);
      const bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (i == 0) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const bool unit = c == "1";
      const bool constant = terms_[i].monomial.degree() == 0;
      if (!unit || constant) out += c;
      if (!constant) {
        if (!unit) out += "*";
        out += terms_[i].monomial.to_string();
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_ || a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
  }

 private:
  void check_compatible(const Polynomial& b) const {
    if (n_ != b.n_ || degree_ != b.degree_) {
      throw Error(ErrorKind::MixedDegree, "adding polynomials of different shape");
    }
  }

  F field_;
  int n_;
  int degree_;
  std::vector<Term> terms_;
};

using RationalPolynomial = Polynomial<RationalField>;

template <Field F>
std::vector<Polynomial<F>> partial_derivatives(const Polynomial<F>& f) {
  std::vector<Polynomial<F>> out;
  out.reserve(static_cast<std::size_t>(f.n() + 1));
  for (int i = 0; i <= f.n(); ++i) out.push_back(f.partial(i));
  return out;
}

/// x_i as a degree-one polynomial.
template <Field F>
Polynomial<F> variable(const F& field, int n, int i) {
  std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return Polynomial<F>::monomial(field, Monomial(std::span<const int>(e)), field.one());
}

/// sum_i x_i^d
RationalPolynomial fermat_polynomial(int n, int d);

/// sum_i x_i * df/dx_i - d * f; identically zero for homogeneous f.
template <Field F>
Polynomial<F> euler_defect(const Polynomial<F>& f) {
  Polynomial<F> sum(f.field(), f.n(), f.degree());
  for (int i = 0; i <= f.n(); ++i) sum = sum + variable(f.field(), f.n(), i) * f.partial(i);
  return sum - f.scaled(f.field().from_integer(f.degree()));
}

}  // namespace hsurf
