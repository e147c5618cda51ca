#pragma once

#include <vector>

#include "regpois/dielectric.hpp"
#include "regpois/vec3.hpp"

namespace regpois {

// 1D reduction of the reaction-field equation for a single charge at the
// origin of a spherically symmetric dielectric:
//   -(1/r^2) (r^2 eps(r) u')' = eps'(r) * G'(r),   G'(r) = -q / (eps_i r^2),
// with regularity u'(0) = 0 and Dirichlet data q(1/eps_e - 1/eps_i)/r_max at
// the outer radius. Solved by direct tridiagonal elimination at high
// resolution, it serves as ground truth for the 3D solver on that benchmark.
struct RadialProblem {
    TanhSphericalDielectric dielectric;
    double charge = 1.0;
    double r_max = 10.0;
    int node_count = 200001;
};

struct RadialProfile {
    double r_max = 0.0;
    double dr = 0.0;
    std::vector<double> u; // u[l] at radius l * dr
};

// Finite-volume discretization: the source term is integrated exactly over
// each cell (the integrand eps'(r) G'(r) r^2 reduces to a pure derivative),
// which keeps the scheme second order through the steep transition band.
RadialProfile solve_radial(const RadialProblem& p);

// Cubic Lagrange interpolation of the profile at |r|. Exact at r = 0 and on
// the outer boundary. Throws std::out_of_range beyond r_max.
double sample_radial(const RadialProfile& profile, const Vec3& r);

} // namespace regpois
