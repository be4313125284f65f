#include "pcoef/linalg.hpp"

#include <stdexcept>

#include <Eigen/LU>

namespace pcoef {

Complex determinant(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix must be square and nonempty");
  // MatrixBase::determinant() switches to closed-form cofactors below 5x5;
  // force the pivoted LU route for every size.
  return Eigen::PartialPivLU<ComplexMatrix>(m).determinant();
}

}  // namespace pcoef
