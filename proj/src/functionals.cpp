#include "pcoef/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcoef/series.hpp"

namespace pcoef {

namespace {

void require_length(const CoeffSeries& p, std::size_t highest, const char* what) {
  if (p.size() <= highest)
    throw std::out_of_range(std::string(what) + ": needs coefficients up to index " + std::to_string(highest));
}

// Rounding can push an exact zero radicand slightly negative.
constexpr double kRadicandSlack = 1e-12;

double checked_sqrt(double radicand, const char* what) {
  if (radicand < -kRadicandSlack)
    throw std::domain_error(std::string(what) + ": negative radicand, coefficients are not from the class");
  return std::sqrt(std::max(radicand, 0.0));
}

}  // namespace

Complex livingston(const CoeffSeries& p, std::size_t k, std::size_t n, Complex w) {
  if (k < 1 || k >= n) throw std::out_of_range("livingston: requires 1 <= k <= n-1");
  require_length(p, n, "livingston");
  return p[n] - w * p[k] * p[n - k];
}

double bound_livingston(Complex w) { return 2.0 * std::max(1.0, regime(w)); }

double bound_A(std::size_t k, Complex w) {
  return 2.0 * std::max(1.0, std::pow(regime(w), static_cast<double>(k)));
}

ComplexMatrix A_matrix(const CoeffSeries& p, std::size_t k, std::size_t n, Complex w) {
  if (n < 1) throw std::out_of_range("A_matrix: requires n >= 1");
  require_length(p, n + k, "A_matrix");
  const auto size = static_cast<Eigen::Index>(k + 1);
  ComplexMatrix m = ComplexMatrix::Zero(size, size);
  for (Eigen::Index j = 0; j < size; ++j) m(0, j) = p[n + k - static_cast<std::size_t>(j)];
  for (Eigen::Index i = 1; i < size; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) m(i, j) = w * p[static_cast<std::size_t>(i - j)];
    m(i, i) = 1.0;
  }
  return m;
}

Complex A_det(const CoeffSeries& p, std::size_t k, std::size_t n, Complex w) {
  if (k == 0) {
    require_length(p, n, "A_det");
    if (n < 1) throw std::out_of_range("A_det: requires n >= 1");
    return p[n];
  }
  return determinant(A_matrix(p, k, n, w));
}

Complex Q_eval(const CoeffSeries& p, std::size_t k, std::size_t n, Complex w, Complex lambda) {
  if (k < 1) throw std::out_of_range("Q_eval: requires k >= 1");
  if (n < 1) throw std::out_of_range("Q_eval: requires n >= 1");
  if (std::abs(std::abs(lambda) - 1.0) > 1e-9) throw std::invalid_argument("Q_eval: requires |lambda| = 1");
  require_length(p, n + k - 1, "Q_eval");
  Complex q = std::pow(lambda, static_cast<int>(n - 1));
  for (std::size_t j = 1; j <= k; ++j) q = lambda * q - w * A_det(p, j - 1, n, w);
  return q;
}

Complex A_herglotz(const HerglotzMeasure& mu, std::size_t k, std::size_t n, Complex w) {
  if (n < 1) throw std::out_of_range("A_herglotz: requires n >= 1");
  const auto& atoms = mu.atoms();
  std::vector<Complex> lambda(atoms.size());
  std::vector<Complex> q(atoms.size());
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    lambda[a] = atoms[a].point();
    q[a] = std::polar(1.0, static_cast<double>(n - 1) * atoms[a].angle);
  }
  auto integrate = [&] {
    Complex s{};
    for (std::size_t a = 0; a < atoms.size(); ++a) s += atoms[a].mass * lambda[a] * q[a];
    return 2.0 * s;
  };
  Complex value = integrate();  // A_{0,n} = p_n
  for (std::size_t j = 1; j <= k; ++j) {
    for (std::size_t a = 0; a < atoms.size(); ++a) q[a] = lambda[a] * q[a] - w * value;
    value = integrate();
  }
  return value;
}

Complex A_delsarte(const CoeffSeries& p, std::size_t k, std::size_t n, Complex w) {
  if (n <= k) throw std::invalid_argument("A_delsarte: requires n >= k+1");
  require_length(p, n + k, "A_delsarte");
  const CoeffSeries q = reciprocal(perturb(p, w, k), k);
  Complex sum{};
  for (std::size_t j = 0; j <= k; ++j) sum += q[j] * p[n + k - j];
  return sum;
}

Inequality generalized_shift(const CoeffSeries& p, std::size_t n, std::size_t m, Complex w) {
  if (n < 1 || m < 1) throw std::out_of_range("generalized_shift: requires n, m >= 1");
  require_length(p, n + m, "generalized_shift");
  const double radicand = 1.0 + std::norm(w) - (std::conj(w) * p[m]).real();
  return {std::abs(p[n + m] - w * p[n]), 2.0 * checked_sqrt(radicand, "generalized_shift")};
}

Inequality brown(const CoeffSeries& p, std::size_t n, std::size_t m, double nu) {
  if (n < 1 || m < 1) throw std::out_of_range("brown: requires n, m >= 1");
  require_length(p, n + m, "brown");
  const Complex rot = std::polar(1.0, nu);
  const double radicand = 2.0 - (rot * p[m]).real();
  return {std::abs(rot * p[n + m] - p[n]), 2.0 * checked_sqrt(radicand, "brown")};
}

Inequality livingston_unnormalized(Complex p0, const CoeffSeries& P, std::size_t k, std::size_t n,
                                   Complex w) {
  if (k < 1 || k >= n) throw std::out_of_range("livingston_unnormalized: requires 1 <= k <= n-1");
  require_length(P, n, "livingston_unnormalized");
  if (!(p0.real() > 0.0)) throw std::domain_error("livingston_unnormalized: requires Re(p0) > 0");
  const double x = p0.real();
  const double lhs = std::abs(P[n] / p0 - w * P[k] * P[n - k] / (p0 * p0));
  const double rhs = 2.0 * (x / std::abs(p0)) * std::max(1.0, std::abs(1.0 - 2.0 * w * x / p0));
  return {lhs, rhs};
}

Inequality A_unnormalized(Complex p0, const CoeffSeries& P, std::size_t k, std::size_t n, Complex w) {
  require_length(P, n + k, "A_unnormalized");
  if (!(p0.real() > 0.0)) throw std::domain_error("A_unnormalized: requires Re(p0) > 0");
  CoeffSeries scaled = P;
  scaled[0] = 1.0;
  for (std::size_t j = 1; j < scaled.size(); ++j) scaled[j] /= p0;
  const double x = p0.real();
  const double r = std::abs(1.0 - 2.0 * w * x / p0);
  const double rhs = 2.0 * (x / std::abs(p0)) * std::max(1.0, std::pow(r, static_cast<double>(k)));
  return {std::abs(A_det(scaled, k, n, w)), rhs};
}

double agreement_ratio(Complex a, Complex b, double rel_tol, double abs_tol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  const double err = std::abs(a - b);
  return scale < 1.0 ? err / abs_tol : err / (scale * rel_tol);
}

bool agree(Complex a, Complex b, double rel_tol, double abs_tol) {
  return agreement_ratio(a, b, rel_tol, abs_tol) <= 1.0;
}

}  // namespace pcoef
