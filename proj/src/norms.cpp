#include "regpois/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace regpois {

Norms compute_norms(const ScalarField& a, const ScalarField& b, double exclusion_radius,
                    const std::vector<Vec3>& exclusion_centers) {
    if (a.grid.n_per_axis != b.grid.n_per_axis || a.grid.spacing != b.grid.spacing) {
        throw std::invalid_argument("compute_norms: fields live on different grids");
    }
    if (exclusion_radius < 0.0) {
        throw std::invalid_argument("compute_norms: exclusion_radius must be non-negative");
    }

    const Grid& g = a.grid;
    const int n = g.n_per_axis;
    const bool exclude = exclusion_radius > 0.0 && !exclusion_centers.empty();

    double linf = 0.0;
    double sum_sq = 0.0;
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                if (exclude) {
                    Vec3 r = node_position(g, i, j, k);
                    bool skip = false;
                    for (const Vec3& c : exclusion_centers) {
                        if (norm(r - c) < exclusion_radius) {
                            skip = true;
                            break;
                        }
                    }
                    if (skip) continue;
                }
                const std::size_t idx = g.linear_index(i, j, k);
                const double d = std::abs(a.values[idx] - b.values[idx]);
                if (d > linf) linf = d;
                if (!is_boundary(g, i, j, k)) sum_sq += d * d;
            }
        }
    }

    Norms out;
    out.linf = linf;
    out.l2 = std::sqrt(g.spacing * g.spacing * g.spacing * sum_sq);
    return out;
}

} // namespace regpois
