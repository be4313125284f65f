#include "pcoef/schwarz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pcoef/series.hpp"

namespace pcoef {

CoeffSeries self_map_from_measure(const HerglotzMeasure& mu, std::size_t N) {
  return phi_from_p(coefficients(mu, N), N);
}

double coefficient_relations_check(const CoeffSeries& a, const CoeffSeries& p) {
  if (a.size() <= 4 || p.size() <= 4) throw std::invalid_argument("coefficient_relations_check: needs degree 4");
  const Complex a1 = a[1], a2 = a[2], a3 = a[3], a4 = a[4];
  const std::array<Complex, 4> residuals{
      p[1] - 2.0 * a1,
      p[2] - 2.0 * (a2 + a1 * a1),
      p[3] - 2.0 * (a3 + 2.0 * a1 * a2 + a1 * a1 * a1),
      p[4] - 2.0 * (a4 + 2.0 * a1 * a3 + a2 * a2 + 3.0 * a1 * a1 * a2 + a1 * a1 * a1 * a1),
  };
  double worst = 0.0;
  for (const auto& r : residuals) worst = std::max(worst, std::abs(r));
  return worst;
}

std::array<Complex, 6> corollary_expressions(const CoeffSeries& a, Complex l) {
  if (a.size() <= 4) throw std::invalid_argument("corollary: needs coefficients a_1..a_4");
  if (std::abs(a[0]) > 1e-12) throw std::invalid_argument("corollary: requires a_0 = 0");
  const Complex a1 = a[1], a2 = a[2], a3 = a[3], a4 = a[4];
  const Complex a1s = a1 * a1;
  return {
      a3 + (1.0 + l) * a1 * a2 + l * a1s * a1,
      a3 + 2.0 * l * a1 * a2 + l * l * a1s * a1,
      a4 + (1.0 + l) * a1 * a3 + a2 * a2 + (1.0 + 2.0 * l) * a1s * a2 + l * a1s * a1s,
      a4 + 2.0 * a1 * a3 + l * a2 * a2 + (1.0 + 2.0 * l) * a1s * a2 + l * a1s * a1s,
      a4 + (1.0 + l) * a1 * a3 + l * a2 * a2 + l * (2.0 + l) * a1s * a2 + l * l * a1s * a1s,
      a4 + 2.0 * l * a1 * a3 + l * a2 * a2 + 3.0 * l * l * a1s * a2 + l * l * l * a1s * a1s,
  };
}

std::array<Inequality, 6> corollary_values(const CoeffSeries& a, Complex lambda) {
  static constexpr std::array<int, 6> kExponent{1, 2, 1, 1, 2, 3};
  const auto expr = corollary_expressions(a, lambda);
  const double r = std::abs(lambda);
  std::array<Inequality, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = {std::abs(expr[i]), std::max(1.0, std::pow(r, kExponent[i]))};
  return out;
}

Inequality schwarz_pick_warmup(const CoeffSeries& a, Complex lambda) {
  if (a.size() <= 2) throw std::invalid_argument("schwarz_pick_warmup: needs a_1, a_2");
  return {std::abs(a[2] + lambda * a[1] * a[1]), std::max(1.0, std::abs(lambda))};
}

double corollary_crosscheck(const HerglotzMeasure& mu, Complex lambda) {
  const CoeffSeries p = coefficients(mu, 4);
  const CoeffSeries a = phi_from_p(p, 4);
  const Complex w = (1.0 - lambda) / 2.0;
  const auto expr = corollary_expressions(a, lambda);
  const std::array<Complex, 6> functional{
      livingston(p, 1, 3, w), A_det(p, 2, 1, w), livingston(p, 1, 4, w),
      livingston(p, 2, 4, w), A_det(p, 2, 2, w), A_det(p, 3, 1, w),
  };
  double worst = 0.0;
  for (std::size_t i = 0; i < 6; ++i) worst = std::max(worst, std::abs(2.0 * expr[i] - functional[i]));
  return worst;
}

}  // namespace pcoef
