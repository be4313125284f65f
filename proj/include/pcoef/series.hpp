#pragma once

// Truncated power-series arithmetic. Every operation takes its truncation
// degree N explicitly; inputs shorter than needed are zero-extended.

#include <cstddef>

#include "pcoef/types.hpp"

namespace pcoef {

/// Cauchy product of a and b truncated at degree N.
CoeffSeries multiply(const CoeffSeries& a, const CoeffSeries& b, std::size_t N);

/// 1/a truncated at degree N, by q_0 = 1/a_0, q_m = −(1/a_0) Σ_{j=1..m} a_j q_{m−j}.
/// Throws std::domain_error when a[0] = 0.
CoeffSeries reciprocal(const CoeffSeries& a, std::size_t N);

/// m-th coefficient of 1/a from the Wronski determinant: (−1)^m times the
/// determinant of the m×m lower-Hessenberg matrix with entries a_{i−j+1}
/// (unit superdiagonal). Requires a[0] = 1 and a.size() > m.
Complex wronski_coefficient(const CoeffSeries& a, std::size_t m);

/// p with coefficients 1..k multiplied by w.
CoeffSeries perturb(const CoeffSeries& p, Complex w, std::size_t k);

/// Coefficients of (1 + φ)/(1 − φ) up to degree N. Requires a[0] = 0.
CoeffSeries p_from_phi(const CoeffSeries& a, std::size_t N);

/// Coefficients of (p − 1)/(p + 1) up to degree N; inverse of p_from_phi
/// when p[0] = 1.
CoeffSeries phi_from_p(const CoeffSeries& p, std::size_t N);

}  // namespace pcoef
