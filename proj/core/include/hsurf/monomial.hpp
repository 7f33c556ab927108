#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hsurf {

inline constexpr int kMaxVariables = 16;

/// Exponent vector in variables x0..xn. The total degree is cached and kept
/// equal to the exponent sum by every mutating operation.
///
/// Ordering is degree-lexicographic with x0 > x1 > ... > xn: a larger degree
/// wins, then the larger exponent at the first differing variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int num_variables);  // the constant monomial
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  int num_variables() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  int operator[](int i) const noexcept { return exps_[static_cast<std::size_t>(i)]; }

  Monomial times_variable(int i) const;
  Monomial divided_by_variable(int i) const;  // requires exponent of x_i > 0
  bool divides(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

  std::string to_string() const;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint16_t degree_ = 0;
};

std::uint64_t binomial(int n, int k);

/// Ranks the monomials of one degree in order from largest to smallest, so
/// index 0 is x0^k and the last index is xn^k. Every coordinate vector of a
/// graded piece S_k uses these indices.
class MonomialIndexer {
 public:
  MonomialIndexer(int num_variables, int degree);

  int num_variables() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return size_; }

  std::size_t index(const Monomial& m) const;
  Monomial monomial(std::size_t index) const;

 private:
  int nvars_;
  int degree_;
  std::size_t size_;
};

/// All monomials of degree k in n+1 variables, largest first; its length is
/// C(n+k, n).
std::vector<Monomial> monomial_basis(int n, int k);

}  // namespace hsurf
