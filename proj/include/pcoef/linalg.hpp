#pragma once

#include <Eigen/Core>

#include "pcoef/types.hpp"

namespace pcoef {

using ComplexMatrix = Eigen::MatrixXcd;

/// Determinant by LU factorization with partial (maximum-modulus) pivoting.
/// Returns 0 for singular input. Throws std::invalid_argument unless the
/// matrix is square and nonempty.
Complex determinant(const ComplexMatrix& m);

}  // namespace pcoef
