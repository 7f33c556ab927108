#include "hsurf/milnor.hpp"

namespace hsurf {

template class JacobianContext<PrimeField>;
template class JacobianContext<RationalField>;

}  // namespace hsurf

namespace hsurf {

template SubspaceBasis<PrimeField> saturation_graded(JacobianContext<PrimeField>&, int);
template SubspaceBasis<RationalField> saturation_graded(JacobianContext<RationalField>&, int);

}  // namespace hsurf
