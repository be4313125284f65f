#pragma once

// Self-maps of the disk fixing the origin, produced from measures through
// φ = (p − 1)/(p + 1), and the coefficient inequalities they satisfy.

#include <array>
#include <cstddef>

#include "pcoef/functionals.hpp"
#include "pcoef/herglotz.hpp"

namespace pcoef {

/// a-series (a_0 = 0) of the self-map attached to mu, up to degree N.
CoeffSeries self_map_from_measure(const HerglotzMeasure& mu, std::size_t N);

/// Max residual of p_1 = 2a_1, p_2 = 2(a_2 + a_1²), p_3 = 2(a_3 + 2a_1a_2 + a_1³),
/// p_4 = 2(a_4 + 2a_1a_3 + a_2² + 3a_1²a_2 + a_1⁴).
double coefficient_relations_check(const CoeffSeries& a, const CoeffSeries& p);

/// The complex expressions inside the six corollary inequalities, in order.
std::array<Complex, 6> corollary_expressions(const CoeffSeries& a, Complex lambda);

/// The six corollary inequalities |expr_K| ≤ max{1, |λ|^{e_K}}. Requires
/// a.size() > 4 and a_0 = 0.
std::array<Inequality, 6> corollary_values(const CoeffSeries& a, Complex lambda);

/// |a_2 + λ a_1²| ≤ max{1, |λ|}.
Inequality schwarz_pick_warmup(const CoeffSeries& a, Complex lambda);

/// Max over the six inequalities of |2·expr_K − F_K(p)|, where p are the
/// coefficients of mu, w = (1 − λ)/2 and F_K the matching functional:
/// livingston (1,3), (1,4), (2,4) and A (2,1), (2,2), (3,1).
double corollary_crosscheck(const HerglotzMeasure& mu, Complex lambda);

}  // namespace pcoef
