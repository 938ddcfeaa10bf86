#include "cotensor/exactlin.hpp"

namespace cotensor::linalg {

template RowEchelon<Rational> row_echelon(const MatrixX<Rational>&);
template MatrixX<Rational> compose(const MatrixX<Rational>&, const MatrixX<Rational>&);
template MatrixX<Rational> kron(const MatrixX<Rational>&, const MatrixX<Rational>&);
template MatrixX<Rational> kron_apply(const MatrixX<Rational>&, const MatrixX<Rational>&,
                                      const MatrixX<Rational>&);
template Subspace<Rational> kernel(const MatrixX<Rational>&);
template Cokernel<Rational> cokernel(const MatrixX<Rational>&);
template std::optional<MatrixX<Rational>> solve(const MatrixX<Rational>&,
                                                const MatrixX<Rational>&);
template MatrixX<Rational> factor_through(const MatrixX<Rational>&, const MatrixX<Rational>&);
template Subspace<Rational> subspace_sum(const Subspace<Rational>&, const Subspace<Rational>&);
template Subspace<Rational> subspace_intersect(const Subspace<Rational>&,
                                               const Subspace<Rational>&);
template Subspace<Rational> preimage(const MatrixX<Rational>&, const Subspace<Rational>&);
template class Subspace<Rational>;

}  // namespace cotensor::linalg
