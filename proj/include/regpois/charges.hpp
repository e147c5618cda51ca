#pragma once

#include <string>
#include <vector>

#include "regpois/dielectric.hpp"
#include "regpois/grid.hpp"
#include "regpois/vec3.hpp"

namespace regpois {

struct PointCharge {
    Vec3 position;
    double magnitude = 0.0; // signed charge number q_j
};

struct ChargeSet {
    std::vector<PointCharge> charges;
};

// Evaluations blow up within this distance of a charge.
inline constexpr double kSingularDistance = 1e-14;

// Free-space potential sum G(r) = sum_j q_j / (eps_i * |r - r_j|). This is the
// singular part of the solution; the solvers only ever evaluate it away from
// the charges.
double greens_potential(const ChargeSet& c, double eps_i, Vec3 r);

// grad G(r) = -sum_j q_j (r - r_j) / (eps_i * |r - r_j|^3).
Vec3 greens_gradient(const ChargeSet& c, double eps_i, Vec3 r);

// Dirichlet data for the original equation: sum_j q_j / (eps_e * |r - r_j|),
// the far-field Coulomb potential of the exterior medium.
double boundary_potential(const ChargeSet& c, double eps_e, Vec3 r);

// Smooth replacement source f = grad(eps) . grad(G), nonzero only where the
// dielectric gradient is (the transition band). Requires every charge to sit
// in a locally uniform dielectric region; throws otherwise.
ScalarField regularized_source(const ChargeSet& c, const DielectricEvaluator& d, const Grid& g);

// Discrete delta density: each charge spreads strength 4*pi*q_j over the 8
// vertices of its containing cell with trilinear weights, divided by h^3, so
// h^3 * sum(values) = 4*pi * sum(q_j).
ScalarField trilinear_source(const ChargeSet& c, const Grid& g);

// Plain-text charge list, one "x y z q" line per charge; '#' lines and blank
// lines are ignored.
ChargeSet load_charges(const std::string& path);

} // namespace regpois
