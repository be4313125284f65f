#pragma once
// Independent reference computations for the tests. Nothing here calls into
// the library's numeric code paths.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "pcoef/herglotz.hpp"
#include "pcoef/rng.hpp"
#include "pcoef/types.hpp"

namespace oracle {

using pcoef::Complex;
using Matrix = std::vector<std::vector<Complex>>;

// Laplace expansion along the first row. Exponential, fine for n ≤ 7.
inline Complex cofactor_det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Complex sum{};
  for (std::size_t col = 0; col < n; ++col) {
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Complex> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const double sign = col % 2 == 0 ? 1.0 : -1.0;
    sum += sign * m[0][col] * cofactor_det(minor);
  }
  return sum;
}

inline Complex get(const std::vector<Complex>& p, std::size_t i) { return i < p.size() ? p[i] : Complex{}; }

// The (k+1)×(k+1) determinant functional written out entry by entry.
inline Matrix a_matrix(const std::vector<Complex>& p, std::size_t k, std::size_t n, Complex w) {
  Matrix m(k + 1, std::vector<Complex>(k + 1));
  for (std::size_t j = 0; j <= k; ++j) m[0][j] = get(p, n + k - j);
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 0; j <= k; ++j) m[i][j] = j < i ? w * get(p, i - j) : (j == i ? Complex{1.0} : Complex{});
  return m;
}

inline Complex a_det(const std::vector<Complex>& p, std::size_t k, std::size_t n, Complex w) {
  return cofactor_det(a_matrix(p, k, n, w));
}

// Q_{k,n}(λ): first row (λ^{n+k−1}, p_{n+k−1}, ..., p_n); row i ≥ 1 starts
// with wλ^{i−1}, then w p_{i−j} left of the unit diagonal.
inline Complex q_det(const std::vector<Complex>& p, std::size_t k, std::size_t n, Complex w, Complex lambda) {
  Matrix m(k + 1, std::vector<Complex>(k + 1));
  m[0][0] = std::pow(lambda, static_cast<int>(n + k - 1));
  for (std::size_t j = 1; j <= k; ++j) m[0][j] = get(p, n + k - j);
  for (std::size_t i = 1; i <= k; ++i) {
    m[i][0] = w * std::pow(lambda, static_cast<int>(i - 1));
    for (std::size_t j = 1; j <= k; ++j) m[i][j] = j < i ? w * get(p, i - j) : (j == i ? Complex{1.0} : Complex{});
  }
  return cofactor_det(m);
}

// 2 Σ m_j e^{i n t_j} with std::exp per term.
inline Complex moment(const pcoef::HerglotzMeasure& mu, std::size_t n) {
  if (n == 0) return 1.0;
  Complex s{};
  for (const auto& a : mu.atoms()) s += a.mass * std::exp(Complex{0.0, static_cast<double>(n) * a.angle});
  return 2.0 * s;
}

inline std::vector<Complex> moments(const pcoef::HerglotzMeasure& mu, std::size_t N) {
  std::vector<Complex> p(N + 1);
  for (std::size_t j = 0; j <= N; ++j) p[j] = moment(mu, j);
  return p;
}

// Naive Cauchy product.
inline std::vector<Complex> convolve(const std::vector<Complex>& a, const std::vector<Complex>& b, std::size_t N) {
  std::vector<Complex> c(N + 1);
  for (std::size_t i = 0; i <= N; ++i)
    for (std::size_t j = 0; j <= i; ++j) c[i] += get(a, j) * get(b, i - j);
  return c;
}

// Coefficient of z^m in 1/(1 + a_1 z + ...) by solving the triangular
// Toeplitz system column by column with a fresh right-hand side.
inline Complex reciprocal_coefficient(const std::vector<Complex>& a, std::size_t m) {
  std::vector<Complex> q(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    Complex rhs = i == 0 ? Complex{1.0} : Complex{};
    for (std::size_t j = 0; j < i; ++j) rhs -= get(a, i - j) * q[j];
    q[i] = rhs / a[0];
  }
  return q[m];
}

inline Complex half_plane_A(std::size_t k, Complex w) { return 2.0 * std::pow(1.0 - 2.0 * w, static_cast<int>(k)); }

inline Complex random_complex(pcoef::Rng& rng, double scale = 1.0) {
  return {rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
}

inline std::vector<Complex> random_series(pcoef::Rng& rng, std::size_t length, Complex a0 = 1.0) {
  std::vector<Complex> a(length);
  a[0] = a0;
  for (std::size_t i = 1; i < length; ++i) a[i] = random_complex(rng);
  return a;
}

inline double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace oracle
