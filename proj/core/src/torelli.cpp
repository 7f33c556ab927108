#include "hsurf/torelli.hpp"

namespace hsurf {

template class QuotientBasis<PrimeField>;
template class QuotientBasis<RationalField>;
template Certificate phi_injective(JacobianContext<PrimeField>&);
template Certificate phi_injective(JacobianContext<RationalField>&);
template SubspaceBasis<PrimeField> variable_multiplication_kernel(JacobianContext<PrimeField>&, int);
template SubspaceBasis<RationalField> variable_multiplication_kernel(JacobianContext<RationalField>&, int);
template PeriodDifferential<PrimeField> period_differential(JacobianContext<PrimeField>&, const DeformationSubspace<PrimeField>&);
template PeriodDifferential<RationalField> period_differential(JacobianContext<RationalField>&,
                                                               const DeformationSubspace<RationalField>&);

}  // namespace hsurf
