#pragma once

// Finite probability measures on the unit circle and the functions of
// positive real part they generate through the Herglotz integral
//
//     p(z) = ∫ (1 + λz) / (1 − λz) dμ(λ),    p_n = 2 ∫ λ^n dμ(λ).

#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pcoef/rng.hpp"
#include "pcoef/types.hpp"

namespace pcoef {

/// Point mass at e^{i·angle}; angle is kept reduced to [0, 2π).
struct UnitAtom {
  double angle = 0.0;
  double mass = 0.0;

  Complex point() const { return std::polar(1.0, angle); }
  friend bool operator==(const UnitAtom&, const UnitAtom&) = default;
};

/// Reduce an angle to [0, 2π).
double reduce_angle(double angle);

/// Distance between two angles measured along the circle, in [0, π].
double angular_distance(double a, double b);

inline constexpr double kMergeTolerance = 1e-9;
inline constexpr double kMassTolerance = 1e-9;

class HerglotzMeasure {
 public:
  /// Builds a measure from raw atoms.
  ///
  /// Angles are reduced mod 2π, zero-mass atoms dropped, atoms closer than
  /// kMergeTolerance merged, and masses renormalized when their total is
  /// within kMassTolerance of 1. Throws std::invalid_argument on negative or
  /// non-finite masses, an empty support, or a total mass off by more.
  explicit HerglotzMeasure(std::vector<UnitAtom> atoms);

  /// Atoms sorted by angle; all masses strictly positive.
  const std::vector<UnitAtom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  /// The reflected measure λ ↦ λ̄.
  HerglotzMeasure conjugate() const;

  /// The measure rotated by e^{i·angle}.
  HerglotzMeasure rotated(double angle) const;

  friend bool operator==(const HerglotzMeasure&, const HerglotzMeasure&) = default;

 private:
  std::vector<UnitAtom> atoms_;
};

/// p_n; equals 1 for n = 0.
Complex coefficient(const HerglotzMeasure& mu, std::size_t n);

/// [p_0, ..., p_N].
CoeffSeries coefficients(const HerglotzMeasure& mu, std::size_t N);

/// Same as coefficients() on raw (angle, mass) arrays, skipping measure
/// construction. Used by the optimizer's inner loop.
void coefficients_raw(std::span<const double> angles, std::span<const double> masses,
                      std::span<Complex> out);

/// p(z). Throws std::domain_error when |z| ≥ 1.
Complex evaluate(const HerglotzMeasure& mu, Complex z);

/// Atoms at φ + 2πk/n, k = 0..n−1, with the given masses (support in e^{iφ}U_n).
HerglotzMeasure roots_of_unity_measure(std::size_t n, double phi, std::span<const double> masses);

/// Measure on the coset e^{iα}U_d; every multiple m of d has p_m = 2e^{imα}.
HerglotzMeasure coset_measure(std::size_t d, double alpha, std::span<const double> masses);

/// Uniform simplex weights of length n.
std::vector<double> uniform_masses(std::size_t n);

/// Rescales a function with positive real part and p(0) = p0 into the class:
/// q_0 = 1, q_n = p_n / Re(p0). coeffs[0] is ignored. Throws
/// std::domain_error when Re(p0) ≤ 0.
CoeffSeries normalize(Complex p0, const CoeffSeries& coeffs);

/// Random measure with the given number of atoms: uniform angles, masses
/// uniform on the simplex. Deterministic per seed.
HerglotzMeasure random_measure(std::size_t atom_count, std::uint64_t seed);

/// Same, drawing from an existing stream.
HerglotzMeasure random_measure(std::size_t atom_count, Rng& rng);

/// Throws std::invalid_argument unless masses are a simplex point of the
/// given length (nonnegative, sum within kMassTolerance of 1).
void require_simplex(std::span<const double> masses, std::size_t expected_length, const char* what);

void to_json(nlohmann::json& j, const HerglotzMeasure& mu);
HerglotzMeasure measure_from_json(const nlohmann::json& j);

}  // namespace pcoef
