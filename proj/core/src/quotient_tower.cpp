#include "hsurf/quotient_tower.hpp"

namespace hsurf {

std::uint64_t smooth_reference_dim(int n, int d, int k) {
  if (d < 2) throw Error(ErrorKind::DegreeTooSmall, "the smooth reference needs d >= 2");
  if (k < 0) return 0;
  // inclusion-exclusion over how many variables reach exponent d-1
  __int128 sum = 0;
  for (int j = 0; j <= n + 1; ++j) {
    const int rest = k - j * (d - 1);
    if (rest < 0) break;
    const __int128 term = static_cast<__int128>(binomial(n + 1, j)) * binomial(rest + n, n);
    sum += (j % 2 == 0) ? term : -term;
  }
  return static_cast<std::uint64_t>(sum);
}

template class QuotientTower<PrimeField>;
template class QuotientTower<RationalField>;

}  // namespace hsurf
