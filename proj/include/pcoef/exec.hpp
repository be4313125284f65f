#pragma once

namespace pcoef {

/// Execution policy for the data-parallel kernels. The serial variants are
/// plain loops kept as the reference the OpenMP variants are tested against.
enum class Exec { serial, parallel };

}  // namespace pcoef
