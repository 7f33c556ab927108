#include "hsurf/koszul.hpp"

namespace hsurf {

std::string_view to_string(KoszulRoute route) {
  switch (route) {
    case KoszulRoute::Direct:
      return "direct";
    case KoszulRoute::Euler:
      return "euler";
  }
  return "unknown";
}

}  // namespace hsurf

namespace hsurf {

template SubspaceBasis<PrimeField> syzygy_space(const Polynomial<PrimeField>&, int);
template SubspaceBasis<RationalField> syzygy_space(const Polynomial<RationalField>&, int);
template SubspaceBasis<PrimeField> trivial_syzygy_space(const Polynomial<PrimeField>&, int);
template SubspaceBasis<RationalField> trivial_syzygy_space(const Polynomial<RationalField>&, int);
template MdrResult mdr(JacobianContext<PrimeField>&, std::optional<int>, const KoszulOptions&);
template MdrResult mdr(JacobianContext<RationalField>&, std::optional<int>, const KoszulOptions&);

}  // namespace hsurf
