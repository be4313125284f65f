#pragma once

#include <cstddef>
#include <vector>

#include "pcoef/types.hpp"

namespace pcoef {

/// Points w on the circle |1 − 2w| = radius: w = (1 + radius·e^{iθ_j})/2 with
/// θ_j = 2πj/count (plus `offset` in units of the spacing).
std::vector<Complex> regime_circle(std::size_t count, double radius, double offset = 0.0);

/// The sweep grid for w: Re w ∈ [−1, 2] × Im w ∈ [−1.5, 1.5] at step 0.25
/// (169 points) followed by 24 points of |1 − 2w| = 1.
std::vector<Complex> w_grid();

/// {0, ±1, ±i, 2, −2, 1+i, 3}.
std::vector<Complex> lambda_grid();

/// ν_j = 2πj/count.
std::vector<double> nu_grid(std::size_t count = 16);

}  // namespace pcoef
