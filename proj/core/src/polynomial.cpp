#include "hsurf/polynomial.hpp"

namespace hsurf {

RationalPolynomial fermat_polynomial(int n, int d) {
  std::vector<RationalPolynomial::Term> terms;
  for (int i = 0; i <= n; ++i) {
    std::vector<int> e(static_cast<std::size_t>(n + 1), 0);
    e[static_cast<std::size_t>(i)] = d;
    terms.push_back({Monomial(std::span<const int>(e)), mpq_class(1)});
  }
  return RationalPolynomial::from_terms(RationalField{}, n, d, std::move(terms));
}

}  // namespace hsurf
