#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

namespace hsurf {

/// Arithmetic in Z/pZ for a prime p < 2^31.
///
/// Elements are kept canonical in [0, p). The 31-bit bound lets row kernels
/// accumulate several products in 64 bits before reducing.
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  bool is_zero(Element a) const noexcept { return a == 0; }

  Element add(Element a, Element b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const;

  Element from_integer(std::int64_t v) const noexcept;
  Element from_rational(const mpq_class& q) const;  // throws BadPrime on a vanishing denominator

  std::string to_string(Element a) const { return std::to_string(a); }
  std::string name() const { return "fp:" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

/// The rational numbers, via GMP.
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;

  Element from_integer(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  Element from_rational(const mpq_class& q) const { return q; }

  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "exact"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept Field = requires(const F& f, const typename F::Element& a, const mpq_class& q) {
  { f.zero() } -> std::convertible_to<typename F::Element>;
  { f.one() } -> std::convertible_to<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.add(a, a) } -> std::convertible_to<typename F::Element>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Element>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
  { f.neg(a) } -> std::convertible_to<typename F::Element>;
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
  { f.from_rational(q) } -> std::convertible_to<typename F::Element>;
  { f.name() } -> std::convertible_to<std::string>;
};

bool is_prime(std::uint64_t n);

inline constexpr std::uint32_t kDefaultPrimeA = 2147483629u;
inline constexpr std::uint32_t kDefaultPrimeB = 2147483587u;

/// The session's coefficient field choice: exact rationals, or a list of
/// primes that must all agree before a result is accepted.
struct FieldConfig {
  enum class Mode { Exact, PrimeFields };

  Mode mode = Mode::PrimeFields;
  std::vector<std::uint32_t> primes{kDefaultPrimeA, kDefaultPrimeB};

  static FieldConfig exact() { return {Mode::Exact, {}}; }
  static FieldConfig two_primes() { return {}; }
  static FieldConfig single_prime(std::uint32_t p) { return {Mode::PrimeFields, {p}}; }

  // Accepts "exact" or a comma list such as "fp:2147483629,fp:2147483587".
  static FieldConfig parse(const std::string& text);

  std::string to_string() const;
  std::vector<std::string> field_names() const;

  // Each prime must exceed 2*d*(n+1) for the session's (n, d).
  void validate_for(int n, int d) const;

  friend bool operator==(const FieldConfig&, const FieldConfig&) = default;
};

}  // namespace hsurf
