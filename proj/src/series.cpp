#include "pcoef/series.hpp"

#include <stdexcept>

#include "pcoef/linalg.hpp"

namespace pcoef {

namespace {
constexpr double kUnitTolerance = 1e-12;
}

CoeffSeries multiply(const CoeffSeries& a, const CoeffSeries& b, std::size_t N) {
  auto out = CoeffSeries::zeros(N + 1);
  for (std::size_t i = 0; i <= N && i < a.size(); ++i) {
    if (a[i] == Complex{}) continue;
    for (std::size_t j = 0; i + j <= N && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

CoeffSeries reciprocal(const CoeffSeries& a, std::size_t N) {
  if (a[0] == Complex{}) throw std::domain_error("reciprocal: constant term is zero");
  const Complex inv0 = 1.0 / a[0];
  auto q = CoeffSeries::zeros(N + 1);
  q[0] = inv0;
  for (std::size_t m = 1; m <= N; ++m) {
    Complex s{};
    for (std::size_t j = 1; j <= m && j < a.size(); ++j) s += a[j] * q[m - j];
    q[m] = -inv0 * s;
  }
  return q;
}

Complex wronski_coefficient(const CoeffSeries& a, std::size_t m) {
  if (m == 0) throw std::invalid_argument("wronski_coefficient: m must be positive");
  if (a.size() <= m) throw std::invalid_argument("wronski_coefficient: series too short");
  if (std::abs(a[0] - 1.0) > kUnitTolerance)
    throw std::invalid_argument("wronski_coefficient: requires a[0] = 1");
  const auto size = static_cast<Eigen::Index>(m);
  ComplexMatrix h = ComplexMatrix::Zero(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j <= i + 1 && j < size; ++j) {
      h(i, j) = (j == i + 1) ? Complex{1.0} : a[static_cast<std::size_t>(i - j + 1)];
    }
  }
  const Complex det = determinant(h);
  return (m % 2 == 0) ? det : -det;
}

CoeffSeries perturb(const CoeffSeries& p, Complex w, std::size_t k) {
  if (p.size() <= k) throw std::invalid_argument("perturb: series shorter than k+1");
  CoeffSeries out = p;
  for (std::size_t j = 1; j <= k; ++j) out[j] *= w;
  return out;
}

CoeffSeries p_from_phi(const CoeffSeries& a, std::size_t N) {
  if (std::abs(a[0]) > kUnitTolerance) throw std::invalid_argument("p_from_phi: requires a[0] = 0");
  auto num = CoeffSeries::zeros(N + 1);
  auto den = CoeffSeries::zeros(N + 1);
  for (std::size_t j = 0; j <= N; ++j) {
    num[j] = a.get(j);
    den[j] = -a.get(j);
  }
  num[0] += 1.0;
  den[0] += 1.0;
  return multiply(num, reciprocal(den, N), N);
}

CoeffSeries phi_from_p(const CoeffSeries& p, std::size_t N) {
  auto num = CoeffSeries::zeros(N + 1);
  auto den = CoeffSeries::zeros(N + 1);
  for (std::size_t j = 0; j <= N; ++j) {
    num[j] = p.get(j);
    den[j] = p.get(j);
  }
  num[0] -= 1.0;
  den[0] += 1.0;
  return multiply(num, reciprocal(den, N), N);
}

}  // namespace pcoef
