#include "pcoef/grids.hpp"

namespace pcoef {

std::vector<Complex> regime_circle(std::size_t count, double radius, double offset) {
  std::vector<Complex> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double t = kTwoPi * (static_cast<double>(j) + offset) / static_cast<double>(count);
    out.push_back((1.0 + std::polar(radius, t)) / 2.0);
  }
  return out;
}

std::vector<Complex> w_grid() {
  std::vector<Complex> out;
  out.reserve(169 + 24);
  for (int i = 0; i <= 12; ++i)
    for (int j = 0; j <= 12; ++j) out.emplace_back(-1.0 + 0.25 * i, -1.5 + 0.25 * j);
  for (const auto& w : regime_circle(24, 1.0)) out.push_back(w);
  return out;
}

std::vector<Complex> lambda_grid() {
  return {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {2, 0}, {-2, 0}, {1, 1}, {3, 0}};
}

std::vector<double> nu_grid(std::size_t count) {
  std::vector<double> out;
  for (std::size_t j = 0; j < count; ++j) out.push_back(kTwoPi * static_cast<double>(j) / static_cast<double>(count));
  return out;
}

}  // namespace pcoef
