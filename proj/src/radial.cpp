#include "regpois/radial.hpp"

#include <cmath>
#include <stdexcept>

namespace regpois {

RadialProfile solve_radial(const RadialProblem& p) {
    if (p.r_max < p.dielectric.outer_radius()) {
        throw std::invalid_argument("radial solve: r_max must cover the transition band (r_max >= r_e)");
    }
    if (p.node_count < 1001) {
        throw std::invalid_argument("radial solve: need at least 1001 nodes for a trustworthy reference");
    }

    const int m = p.node_count;
    const double dr = p.r_max / (m - 1);
    const double eps_i = p.dielectric.value_at_radius(0.0);
    const double eps_e = p.dielectric.value_at_radius(p.r_max);

    // ke[l] = r^2 eps at the face between nodes l and l+1
    std::vector<double> ke(m - 1);
    for (int l = 0; l < m - 1; ++l) {
        const double rf = (l + 0.5) * dr;
        ke[l] = rf * rf * p.dielectric.value_at_radius(rf);
    }

    // Row l: -ke[l-1] u[l-1] + (ke[l-1]+ke[l]) u[l] - ke[l] u[l+1] = rhs[l],
    // rhs from the exact cell integral of eps' G' r^2 = -(q/eps_i) eps'.
    std::vector<double> lower(m, 0.0), diag(m, 0.0), upper(m, 0.0), rhs(m, 0.0);

    // r = 0: symmetric extension u(-dr) = u(dr) collapses the Laplacian to
    // 6 eps (u0 - u1) / dr^2, and the source vanishes at the origin.
    diag[0] = 6.0 * p.dielectric.value_at_radius(0.5 * dr);
    upper[0] = -diag[0];
    rhs[0] = 0.0;

    const double src_scale = -p.charge * dr / eps_i;
    for (int l = 1; l < m - 1; ++l) {
        lower[l] = -ke[l - 1];
        diag[l] = ke[l - 1] + ke[l];
        upper[l] = -ke[l];
        rhs[l] = src_scale * p.dielectric.band_change((l - 0.5) * dr, (l + 0.5) * dr);
    }

    diag[m - 1] = 1.0;
    rhs[m - 1] = p.charge * (1.0 / eps_e - 1.0 / eps_i) / p.r_max;

    // Thomas elimination; the matrix is diagonally dominant, no pivoting needed.
    for (int l = 1; l < m; ++l) {
        const double w = lower[l] / diag[l - 1];
        diag[l] -= w * upper[l - 1];
        rhs[l] -= w * rhs[l - 1];
    }
    RadialProfile out;
    out.r_max = p.r_max;
    out.dr = dr;
    out.u.resize(m);
    out.u[m - 1] = rhs[m - 1] / diag[m - 1];
    for (int l = m - 2; l >= 0; --l) {
        out.u[l] = (rhs[l] - upper[l] * out.u[l + 1]) / diag[l];
    }
    return out;
}

double sample_radial(const RadialProfile& profile, const Vec3& r) {
    const double radius = norm(r);
    if (radius > profile.r_max * (1.0 + 1e-12)) {
        throw std::out_of_range("radial sample: radius exceeds the profile extent");
    }
    if (radius >= profile.r_max) return profile.u.back();

    const int m = static_cast<int>(profile.u.size());
    const double t = radius / profile.dr;
    int base = static_cast<int>(std::floor(t)) - 1;
    if (base < 0) base = 0;
    if (base > m - 4) base = m - 4;
    const double xi = t - base;

    // 4-point Lagrange weights at offsets 0..3; exact when xi lands on a node
    const double w0 = -(xi - 1.0) * (xi - 2.0) * (xi - 3.0) / 6.0;
    const double w1 = xi * (xi - 2.0) * (xi - 3.0) / 2.0;
    const double w2 = -xi * (xi - 1.0) * (xi - 3.0) / 2.0;
    const double w3 = xi * (xi - 1.0) * (xi - 2.0) / 6.0;
    return w0 * profile.u[base] + w1 * profile.u[base + 1] + w2 * profile.u[base + 2] +
           w3 * profile.u[base + 3];
}

} // namespace regpois
