#include "hsurf/monomial.hpp"

#include <limits>

#include "hsurf/error.hpp"

namespace hsurf {

namespace {

void check_variables(int nvars) {
  if (nvars < 1 || nvars > kMaxVariables) {
    throw Error(ErrorKind::InvalidArgument, "number of variables must lie in 1.." + std::to_string(kMaxVariables));
  }
}

}  // namespace

Monomial::Monomial(int num_variables) {
  check_variables(num_variables);
  nvars_ = static_cast<std::uint8_t>(num_variables);
}

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) {
  check_variables(static_cast<int>(exponents.size()));
  nvars_ = static_cast<std::uint8_t>(exponents.size());
  int deg = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) {
      throw Error(ErrorKind::InvalidArgument, "exponent out of range");
    }
    exps_[i] = static_cast<std::uint8_t>(exponents[i]);
    deg += exponents[i];
  }
  degree_ = static_cast<std::uint16_t>(deg);
}

Monomial Monomial::times_variable(int i) const {
  Monomial m = *this;
  if (m.exps_[static_cast<std::size_t>(i)] == 255) throw Error(ErrorKind::InvalidArgument, "exponent overflow");
  ++m.exps_[static_cast<std::size_t>(i)];
  ++m.degree_;
  return m;
}

Monomial Monomial::divided_by_variable(int i) const {
  Monomial m = *this;
  if (m.exps_[static_cast<std::size_t>(i)] == 0) {
    throw Error(ErrorKind::InvalidArgument, "variable does not divide monomial");
  }
  --m.exps_[static_cast<std::size_t>(i)];
  --m.degree_;
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (int i = 0; i < nvars_; ++i) {
    if (exps_[static_cast<std::size_t>(i)] > other.exps_[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorKind::InvalidArgument, "monomials live in different rings");
  Monomial m = a;
  for (int i = 0; i < a.nvars_; ++i) {
    int e = a.exps_[static_cast<std::size_t>(i)] + b.exps_[static_cast<std::size_t>(i)];
    if (e > 255) throw Error(ErrorKind::InvalidArgument, "exponent overflow");
    m.exps_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  for (int i = 0; i < kMaxVariables; ++i) {
    auto c = a.exps_[static_cast<std::size_t>(i)] <=> b.exps_[static_cast<std::size_t>(i)];
    if (c != 0) return c;
  }
  return a.nvars_ <=> b.nvars_;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < nvars_; ++i) {
    int e = exps_[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) {
      throw Error(ErrorKind::InvalidArgument, "binomial coefficient overflow");
    }
  }
  return static_cast<std::uint64_t>(r);
}

MonomialIndexer::MonomialIndexer(int num_variables, int degree) : nvars_(num_variables), degree_(degree) {
  check_variables(num_variables);
  if (degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  size_ = static_cast<std::size_t>(binomial(degree + num_variables - 1, num_variables - 1));
}

std::size_t MonomialIndexer::index(const Monomial& m) const {
  const int n = nvars_ - 1;
  int rem = degree_;
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) {
    const int e = m[i];
    if (rem - e - 1 >= 0) idx += static_cast<std::size_t>(binomial(rem - e - 1 + n - i, n - i));
    rem -= e;
  }
  return idx;
}

Monomial MonomialIndexer::monomial(std::size_t index) const {
  const int n = nvars_ - 1;
  std::array<int, kMaxVariables> e{};
  int rem = degree_;
  for (int i = 0; i < n; ++i) {
    for (int v = rem; v >= 0; --v) {
      auto cnt = static_cast<std::size_t>(binomial(rem - v + n - i - 1, n - i - 1));
      if (index < cnt) {
        e[static_cast<std::size_t>(i)] = v;
        break;
      }
      index -= cnt;
    }
    rem -= e[static_cast<std::size_t>(i)];
  }
  e[static_cast<std::size_t>(n)] = rem;
  return Monomial(std::span<const int>(e.data(), static_cast<std::size_t>(nvars_)));
}

std::vector<Monomial> monomial_basis(int n, int k) {
  MonomialIndexer idx(n + 1, k);
  std::vector<Monomial> out;
  out.reserve(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out.push_back(idx.monomial(i));
  if (out.size() != binomial(n + k, n)) {
    throw Error(ErrorKind::InvalidArgument, "monomial enumeration size mismatch");
  }
  return out;
}

}  // namespace hsurf
