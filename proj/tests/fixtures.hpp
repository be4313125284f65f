#pragma once
// Parameter tuples shared by the unit and acceptance tests.

#include <cmath>
#include <numeric>
#include <vector>

#include "pcoef/extremal.hpp"
#include "pcoef/rng.hpp"

namespace fixtures {

// Two-arc parameters that give a nonempty construction. For n = 2k any arc
// angle with M in [0, 1] works. For n > 2k, ψ is solved so the first arc set
// meets the U_{n−2k} coset, and φ is taken from the finite list that makes
// the second one meet it too: π − 2φ ∈ (2π·gcd(k, n−2k)/(n−2k))·Z.
// Coincident arcs (|φ| = π/2) only balance when w = 1.
inline std::vector<pcoef::T3Params> t3_tuples(std::size_t count, std::uint64_t seed) {
  using pcoef::kPi;
  pcoef::Rng rng(seed);
  std::vector<pcoef::T3Params> out;
  while (out.size() < count) {
    pcoef::T3Params p;
    p.n = static_cast<std::size_t>(rng.integer(2, 9));
    p.k = static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(p.n) - 1));
    p.theta = rng.uniform(-0.95 * kPi, 0.95 * kPi);
    p.c = rng.uniform(-kPi, kPi);
    const std::size_t k = std::min(p.k, p.n - p.k);
    const std::size_t rest = p.n - 2 * k;
    if (rest == 0) {
      p.phi = rng.uniform(-0.5 * kPi, 0.5 * kPi);
    } else {
      const double g = static_cast<double>(std::gcd(k, rest));
      const double r = static_cast<double>(rest);
      const auto steps = static_cast<std::int64_t>(r / g);
      p.phi = kPi / 2 - kPi * g * static_cast<double>(rng.integer(0, steps)) / r;
      p.psi = (p.phi + p.c / 2) / (static_cast<double>(k) / r + 0.5);
    }
    const bool merged = std::abs(std::abs(p.phi) - kPi / 2) < 1e-12;
    if (merged) {
      p.theta = 0.0;
    } else {
      const double M = pcoef::t3_mass_formula(p.theta, p.phi);
      if (M < 0.0 || M > 1.0) continue;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace fixtures
