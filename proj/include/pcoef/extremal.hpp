#pragma once

// Measures attaining equality in the coefficient bounds, and a classifier
// that recognizes the equality structures in a given measure.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pcoef/herglotz.hpp"

namespace pcoef {

enum class EqualityTheorem {
  T_A,       // |p_n| = 2
  T1_lt,     // |1−2w| < 1: p_k = 0, support in e^{iφ}U_n
  T1_gt,     // |1−2w| > 1: support in e^{iθ}U_k ∩ e^{iφ}U_n
  T1_eq_i,   // |1−2w| = 1, p_k = 0
  T1_eq_ii,  // |1−2w| = 1, two-arc support with prescribed arc masses
  T2_lt,     // determinant bound, support in e^{iφ}U_{n+k}, p_1..p_k = 0
  T2_point,  // determinant bound, single-point support
};

std::string to_string(EqualityTheorem t);

/// Parameters recovered for (or used by) an equality case. Fields that do not
/// apply to the case stay empty.
struct EqualityParams {
  std::optional<double> phi;         // rotation of the U_n (or U_{n+k}) coset
  std::optional<double> theta;       // rotation of the U_k coset, or w = (1+e^{iθ})/2
  std::optional<double> psi;         // rotation parameter of the U_{n−2k} coset
  std::optional<double> c;           // argument of the functional value
  std::optional<double> phi_arc;     // arc parameter, |φ| ≤ π/2
  std::optional<double> mass_first;  // total mass M on the first arc set
};

struct EqualityCase {
  EqualityTheorem theorem;
  EqualityParams parameters;
};

/// Equality not recognized. bound_attained is set when the value sits on the
/// bound but no known structure matched.
struct NoEquality {
  double gap = 0.0;
  bool bound_attained = false;
};

using Classification = std::variant<EqualityCase, NoEquality>;

void to_json(nlohmann::json& j, const EqualityCase& e);
void to_json(nlohmann::json& j, const Classification& c);

/// Any measure on e^{iφ}U_n; |p_n| = 2.
HerglotzMeasure extremal_caratheodory(std::size_t n, double phi, std::span<const double> masses);

/// Uniform measure on e^{ic/n}U_n; p_k = 0 and |p_n − w p_k p_{n−k}| = 2.
HerglotzMeasure extremal_T1_small_w(std::size_t k, std::size_t n, double c);

/// Measure on the gcd(k, n)-coset e^{iα}U_d, any masses; the Livingston
/// functional has modulus 2|1−2w|.
HerglotzMeasure extremal_T1_large_w(std::size_t k, std::size_t n, double alpha,
                                    std::span<const double> masses);

/// Uniform measure on e^{iφ}U_{n+k}; p_1 = ... = p_{n+k−1} = 0.
HerglotzMeasure extremal_T2(std::size_t k, std::size_t n, double phi);

/// Inputs of the two-arc construction on the circle |1−2w| = 1, with
/// w = (1+e^{iθ})/2. Empty sub-mass vectors mean uniform within each set.
struct T3Params {
  std::size_t k = 1;
  std::size_t n = 2;
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;
  double c = 0.0;
  std::vector<double> sub_masses_a;
  std::vector<double> sub_masses_b;
};

struct T3Construction {
  HerglotzMeasure measure;
  std::size_t k_used;                  // min(k, n−k); the functional is symmetric
  std::vector<double> first_angles;    // support points of the first arc set
  std::vector<double> second_angles;   // of the second (empty when merged)
  double mass_first;                   // M
  double mass_second;                  // 1 − M
  bool merged;                         // |φ| = π/2: the two sets coincide
};

/// Builds the two-arc extremal measure. Throws std::invalid_argument naming the
/// violated condition: |θ| < π, |φ| ≤ π/2, M ∈ [0, 1], nonempty arc sets
/// (n > 2k), sub-mass vectors sized to their sets. ψ is unused when n = 2k.
T3Construction extremal_T3_detailed(const T3Params& params);
HerglotzMeasure extremal_T3(const T3Params& params);

/// M = ½ (1 + sinθ/(1+cosθ) · tanφ).
double t3_mass_formula(double theta, double phi);

/// True when every atom lies within angular distance tol of e^{iφ}U_m for a
/// single φ.
bool support_in_coset(const HerglotzMeasure& mu, std::size_t m, double tol = 1e-8);

/// Equality structures for the Livingston bound, tested in order: p_k = 0 on
/// a rotated U_n, gcd(k, n)-coset, two-arc structure (only on |1−2w| = 1).
Classification classify_equality(const HerglotzMeasure& mu, std::size_t k, std::size_t n, Complex w,
                                 double tol);

/// Equality in |p_n| ≤ 2.
Classification classify_caratheodory(const HerglotzMeasure& mu, std::size_t n, double tol);

/// Equality in the determinant bound (k = 0 delegates to classify_caratheodory).
Classification classify_equality_A(const HerglotzMeasure& mu, std::size_t k, std::size_t n, Complex w,
                                   double tol);

}  // namespace pcoef
