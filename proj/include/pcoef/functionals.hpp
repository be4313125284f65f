#pragma once

// Coefficient functionals on the Carathéodory class and their sharp bounds.
//
// A_{k,n}(w) is evaluated three ways that must agree:
//   A_det        the (k+1)×(k+1) determinant itself (reference path),
//   A_herglotz   2 Σ mass·λ·Q_{k,n}(λ) over the atoms of the measure,
//   A_delsarte   Σ_{j≤k} q_j p_{n+k−j}, q the reciprocal of the perturbed
//                series (only for n ≥ k+1).

#include <cstddef>

#include "pcoef/herglotz.hpp"
#include "pcoef/linalg.hpp"
#include "pcoef/types.hpp"

namespace pcoef {

/// (k, n, w) indexing one functional instance.
struct FunctionalParams {
  std::size_t k = 0;
  std::size_t n = 1;
  Complex w{1.0, 0.0};
};

/// |1 − 2w|; the bounds change shape where it crosses 1.
inline double regime(Complex w) { return std::abs(1.0 - 2.0 * w); }

/// Left/right sides of an inequality lhs ≤ rhs.
struct Inequality {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack() const { return rhs - lhs; }
};

/// p_n − w p_k p_{n−k}; requires 1 ≤ k ≤ n−1 and p.size() > n
/// (std::out_of_range otherwise).
Complex livingston(const CoeffSeries& p, std::size_t k, std::size_t n, Complex w);

/// 2 max{1, |1 − 2w|}.
double bound_livingston(Complex w);

/// 2 max{1, |1 − 2w|^k}.
double bound_A(std::size_t k, Complex w);

/// Row 0 holds (p_{n+k}, ..., p_n); row i ≥ 1 holds w p_{i−j} left of the
/// unit diagonal and zeros to its right.
ComplexMatrix A_matrix(const CoeffSeries& p, std::size_t k, std::size_t n, Complex w);

/// det A_matrix(p, k, n, w). Requires n ≥ 1 and p.size() > n+k.
Complex A_det(const CoeffSeries& p, std::size_t k, std::size_t n, Complex w);

/// Q_{k,n}(λ) by Q_{0,n} = λ^{n−1}, Q_{j,n} = λ Q_{j−1,n} − w A_{j−1,n}.
/// Requires k ≥ 1, |λ| = 1 within 1e−9 and p.size() > n+k−1.
Complex Q_eval(const CoeffSeries& p, std::size_t k, std::size_t n, Complex w, Complex lambda);

/// A_{k,n}(w) = 2 ∫ λ Q_{k,n}(λ) dμ. The lower-order A_{j,n} feeding the
/// recursion are themselves produced by the integral, so this path never
/// touches the determinant.
Complex A_herglotz(const HerglotzMeasure& mu, std::size_t k, std::size_t n, Complex w);

/// A_{k,n}(w) through the reciprocal of the perturbed series. Throws
/// std::invalid_argument when n ≤ k.
Complex A_delsarte(const CoeffSeries& p, std::size_t k, std::size_t n, Complex w);

/// |p_{n+m} − w p_n| ≤ 2 (1 + |w|² − Re(w̄ p_m))^{1/2}. Throws
/// std::domain_error when the radicand is negative beyond rounding, which
/// means p is not a member of the class.
Inequality generalized_shift(const CoeffSeries& p, std::size_t n, std::size_t m, Complex w);

/// |e^{iν} p_{n+m} − p_n| ≤ 2 (2 − Re(e^{iν} p_m))^{1/2}.
Inequality brown(const CoeffSeries& p, std::size_t n, std::size_t m, double nu);

/// The Livingston inequality for a non-normalized function with positive
/// real part, p(0) = p0 and coefficients P (P[0] ignored), evaluated directly:
/// |P_n/p0 − w P_k P_{n−k}/p0²| ≤ 2 (Re p0/|p0|) max{1, |1 − 2w Re p0/p0|}.
Inequality livingston_unnormalized(Complex p0, const CoeffSeries& P, std::size_t k, std::size_t n,
                                   Complex w);

/// The determinant bound for the same setting, with P_j/p0 in place of p_j.
Inequality A_unnormalized(Complex p0, const CoeffSeries& P, std::size_t k, std::size_t n, Complex w);

/// Agreement test used across the cross-path checks: absolute error at most
/// abs_tol while both magnitudes are below 1, relative error at most rel_tol
/// otherwise.
bool agree(Complex a, Complex b, double rel_tol = 1e-10, double abs_tol = 1e-12);

/// Error of a against b in units of the agree() tolerance (≤ 1 means agree).
double agreement_ratio(Complex a, Complex b, double rel_tol = 1e-10, double abs_tol = 1e-12);

}  // namespace pcoef
