#include "regpois/charges.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace regpois {

namespace {

void require_nonempty(const ChargeSet& c) {
    if (c.charges.empty())
        throw std::invalid_argument("charge set must not be empty");
}

} // namespace

double greens_potential(const ChargeSet& c, double eps_i, Vec3 r) {
    require_nonempty(c);
    double sum = 0.0;
    for (const auto& pc : c.charges) {
        const double dist = norm(r - pc.position);
        if (dist < kSingularDistance)
            throw std::domain_error("greens_potential: evaluation point coincides with a charge");
        sum += pc.magnitude / (eps_i * dist);
    }
    return sum;
}

Vec3 greens_gradient(const ChargeSet& c, double eps_i, Vec3 r) {
    require_nonempty(c);
    Vec3 sum{0.0, 0.0, 0.0};
    for (const auto& pc : c.charges) {
        const Vec3 d = r - pc.position;
        const double dist = norm(d);
        if (dist < kSingularDistance)
            throw std::domain_error("greens_gradient: evaluation point coincides with a charge");
        sum = sum + (-pc.magnitude / (eps_i * dist * dist * dist)) * d;
    }
    return sum;
}

double boundary_potential(const ChargeSet& c, double eps_e, Vec3 r) {
    require_nonempty(c);
    double sum = 0.0;
    for (const auto& pc : c.charges) {
        const double dist = norm(r - pc.position);
        if (dist < kSingularDistance)
            throw std::domain_error("boundary_potential: evaluation point coincides with a charge");
        sum += pc.magnitude / (eps_e * dist);
    }
    return sum;
}

ScalarField regularized_source(const ChargeSet& c, const DielectricEvaluator& d, const Grid& g) {
    require_nonempty(c);
    for (const auto& pc : c.charges) {
        if (!d.locally_uniform(pc.position))
            throw std::invalid_argument(
                "regularized_source: charge outside the uniform interior region");
    }
    // The interior permittivity at the charges; locally_uniform guarantees a
    // well-defined value there.
    const double eps_i = d.value(c.charges.front().position);

    ScalarField f(g);
    const int n = g.n_per_axis;
#pragma omp parallel for schedule(static) collapse(2)
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                const Vec3 p = node_position(g, i, j, k);
                const Vec3 de = d.gradient(p);
                if (de.x == 0.0 && de.y == 0.0 && de.z == 0.0)
                    continue; // outside the transition band; keep the exact zero
                f.at(i, j, k) = dot(de, greens_gradient(c, eps_i, p));
            }
        }
    }
    return f;
}

ScalarField trilinear_source(const ChargeSet& c, const Grid& g) {
    require_nonempty(c);
    ScalarField f(g);
    const int n = g.n_per_axis;
    const double h = g.spacing;
    const double inv_cell = 1.0 / (h * h * h);
    for (const auto& pc : c.charges) {
        const Vec3 rel = pc.position - g.lower_corner;
        const double fx = rel.x / h;
        const double fy = rel.y / h;
        const double fz = rel.z / h;
        if (fx < 0.0 || fy < 0.0 || fz < 0.0 || fx > n - 1 || fy > n - 1 || fz > n - 1)
            throw std::invalid_argument("trilinear_source: charge outside the grid");
        // Containing cell; a charge on the far face belongs to the last cell.
        const auto cell = [n](double frac) {
            int idx = static_cast<int>(std::floor(frac));
            if (idx > n - 2)
                idx = n - 2;
            return idx;
        };
        const int ix = cell(fx), iy = cell(fy), iz = cell(fz);
        const double tx = fx - ix, ty = fy - iy, tz = fz - iz;
        const double strength = 4.0 * std::numbers::pi * pc.magnitude * inv_cell;
        for (int dz = 0; dz < 2; ++dz) {
            for (int dy = 0; dy < 2; ++dy) {
                for (int dx = 0; dx < 2; ++dx) {
                    const double w = (dx ? tx : 1.0 - tx) * (dy ? ty : 1.0 - ty) *
                                     (dz ? tz : 1.0 - tz);
                    f.at(ix + dx, iy + dy, iz + dz) += strength * w;
                }
            }
        }
    }
    return f;
}

ChargeSet load_charges(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("load_charges: cannot open " + path);
    ChargeSet set;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        PointCharge pc;
        if (!(fields >> pc.position.x >> pc.position.y >> pc.position.z >> pc.magnitude))
            throw std::invalid_argument("load_charges: malformed line " + std::to_string(lineno) +
                                        " in " + path);
        std::string extra;
        if (fields >> extra)
            throw std::invalid_argument("load_charges: trailing fields on line " +
                                        std::to_string(lineno) + " in " + path);
        set.charges.push_back(pc);
    }
    if (set.charges.empty())
        throw std::invalid_argument("load_charges: no charges in " + path);
    return set;
}

} // namespace regpois
