#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace pcoef {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Truncated power series c[0] + c[1] z + ... + c[N] z^N.
///
/// Members of the Carathéodory class carry c[0] = 1; disk self-maps fixing
/// the origin carry c[0] = 0.
class CoeffSeries {
 public:
  CoeffSeries() : coeffs_{Complex{1.0, 0.0}} {}
  explicit CoeffSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("CoeffSeries: needs at least one coefficient");
  }
  CoeffSeries(std::initializer_list<Complex> coeffs) : CoeffSeries(std::vector<Complex>(coeffs)) {}

  /// Zero series of the given length.
  static CoeffSeries zeros(std::size_t length) { return CoeffSeries(std::vector<Complex>(length)); }

  std::size_t size() const noexcept { return coeffs_.size(); }
  /// Highest stored degree.
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }

  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }
  Complex& operator[](std::size_t i) { return coeffs_[i]; }

  /// Coefficient with zero extension past the stored degree.
  Complex get(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Complex{}; }

  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const CoeffSeries&, const CoeffSeries&) = default;

 private:
  std::vector<Complex> coeffs_;
};

}  // namespace pcoef
