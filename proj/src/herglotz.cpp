#include "pcoef/herglotz.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace pcoef {

double reduce_angle(double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("angle must be finite");
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double angular_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

HerglotzMeasure::HerglotzMeasure(std::vector<UnitAtom> atoms) {
  double total = 0.0;
  for (auto& atom : atoms) {
    if (!std::isfinite(atom.mass) || atom.mass < 0.0)
      throw std::invalid_argument("HerglotzMeasure: masses must be finite and nonnegative");
    atom.angle = reduce_angle(atom.angle);
    total += atom.mass;
  }
  std::erase_if(atoms, [](const UnitAtom& a) { return a.mass == 0.0; });
  if (atoms.empty()) throw std::invalid_argument("HerglotzMeasure: support is empty");
  if (std::abs(total - 1.0) > kMassTolerance)
    throw std::invalid_argument("HerglotzMeasure: total mass " + std::to_string(total) + " is not 1");

  std::sort(atoms.begin(), atoms.end(),
            [](const UnitAtom& a, const UnitAtom& b) { return a.angle < b.angle; });
  for (const auto& atom : atoms) {
    if (!atoms_.empty() && angular_distance(atoms_.back().angle, atom.angle) < kMergeTolerance) {
      atoms_.back().mass += atom.mass;
    } else {
      atoms_.push_back(atom);
    }
  }
  // The first and last atoms may be neighbours across angle 0.
  if (atoms_.size() > 1 &&
      angular_distance(atoms_.front().angle, atoms_.back().angle) < kMergeTolerance) {
    atoms_.front().mass += atoms_.back().mass;
    atoms_.pop_back();
  }
  for (auto& atom : atoms_) atom.mass /= total;
}

HerglotzMeasure HerglotzMeasure::conjugate() const {
  std::vector<UnitAtom> out = atoms_;
  for (auto& a : out) a.angle = -a.angle;
  return HerglotzMeasure(std::move(out));
}

HerglotzMeasure HerglotzMeasure::rotated(double angle) const {
  std::vector<UnitAtom> out = atoms_;
  for (auto& a : out) a.angle += angle;
  return HerglotzMeasure(std::move(out));
}

Complex coefficient(const HerglotzMeasure& mu, std::size_t n) {
  if (n == 0) return {1.0, 0.0};
  Complex sum{};
  const double dn = static_cast<double>(n);
  for (const auto& a : mu.atoms()) sum += a.mass * std::polar(1.0, dn * a.angle);
  return 2.0 * sum;
}

CoeffSeries coefficients(const HerglotzMeasure& mu, std::size_t N) {
  auto out = CoeffSeries::zeros(N + 1);
  for (std::size_t j = 0; j <= N; ++j) out[j] = coefficient(mu, j);
  return out;
}

void coefficients_raw(std::span<const double> angles, std::span<const double> masses,
                      std::span<Complex> out) {
  if (out.empty()) return;
  std::fill(out.begin(), out.end(), Complex{});
  for (std::size_t a = 0; a < angles.size(); ++a) {
    const Complex step = std::polar(1.0, angles[a]);
    Complex power = 2.0 * masses[a];
    for (std::size_t j = 1; j < out.size(); ++j) {
      power *= step;
      out[j] += power;
    }
  }
  out[0] = 1.0;
}

Complex evaluate(const HerglotzMeasure& mu, Complex z) {
  if (!(std::abs(z) < 1.0)) throw std::domain_error("evaluate: requires |z| < 1");
  Complex sum{};
  for (const auto& a : mu.atoms()) {
    const Complex lz = a.point() * z;
    sum += a.mass * (1.0 + lz) / (1.0 - lz);
  }
  return sum;
}

void require_simplex(std::span<const double> masses, std::size_t expected_length, const char* what) {
  if (masses.size() != expected_length)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(expected_length) +
                                " masses, got " + std::to_string(masses.size()));
  double total = 0.0;
  for (double m : masses) {
    if (!std::isfinite(m) || m < 0.0)
      throw std::invalid_argument(std::string(what) + ": masses must be nonnegative");
    total += m;
  }
  if (std::abs(total - 1.0) > kMassTolerance)
    throw std::invalid_argument(std::string(what) + ": masses must sum to 1");
}

HerglotzMeasure roots_of_unity_measure(std::size_t n, double phi, std::span<const double> masses) {
  if (n == 0) throw std::invalid_argument("roots_of_unity_measure: n must be positive");
  require_simplex(masses, n, "roots_of_unity_measure");
  std::vector<UnitAtom> atoms;
  atoms.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    atoms.push_back({phi + kTwoPi * static_cast<double>(k) / static_cast<double>(n), masses[k]});
  return HerglotzMeasure(std::move(atoms));
}

HerglotzMeasure coset_measure(std::size_t d, double alpha, std::span<const double> masses) {
  return roots_of_unity_measure(d, alpha, masses);
}

std::vector<double> uniform_masses(std::size_t n) {
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

CoeffSeries normalize(Complex p0, const CoeffSeries& coeffs) {
  const double x = p0.real();
  if (!(x > 0.0)) throw std::domain_error("normalize: requires Re(p0) > 0");
  CoeffSeries q = coeffs;
  q[0] = 1.0;
  for (std::size_t j = 1; j < q.size(); ++j) q[j] /= x;
  return q;
}

HerglotzMeasure random_measure(std::size_t atom_count, Rng& rng) {
  if (atom_count == 0) throw std::invalid_argument("random_measure: atom_count must be positive");
  std::vector<UnitAtom> atoms(atom_count);
  double total = 0.0;
  for (auto& a : atoms) {
    a.angle = rng.uniform(0.0, kTwoPi);
    a.mass = rng.exponential();
    total += a.mass;
  }
  if (total == 0.0) {
    for (auto& a : atoms) a.mass = 1.0;
    total = static_cast<double>(atom_count);
  }
  for (auto& a : atoms) a.mass /= total;
  return HerglotzMeasure(std::move(atoms));
}

HerglotzMeasure random_measure(std::size_t atom_count, std::uint64_t seed) {
  Rng rng(seed);
  return random_measure(atom_count, rng);
}

void to_json(nlohmann::json& j, const HerglotzMeasure& mu) {
  auto atoms = nlohmann::json::array();
  for (const auto& a : mu.atoms()) atoms.push_back({{"angle", a.angle}, {"mass", a.mass}});
  j = nlohmann::json{{"atoms", std::move(atoms)}};
}

HerglotzMeasure measure_from_json(const nlohmann::json& j) {
  std::vector<UnitAtom> atoms;
  for (const auto& a : j.at("atoms")) atoms.push_back({a.at("angle").get<double>(), a.at("mass").get<double>()});
  return HerglotzMeasure(std::move(atoms));
}

}  // namespace pcoef
