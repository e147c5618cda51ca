#pragma once

#include <vector>

#include "regpois/grid.hpp"
#include "regpois/vec3.hpp"

namespace regpois {

struct Norms {
    double l2 = 0.0;   // sqrt(h^3 * sum over interior nodes of (a-b)^2)
    double linf = 0.0; // max |a-b| over all nodes
};

// Difference norms of two fields on the same grid. Nodes within
// exclusion_radius of any of the given positions are skipped (radius 0 or an
// empty list includes everything). The grid-function L2 norm runs over
// interior nodes only; Linf runs over all nodes.
Norms compute_norms(const ScalarField& a, const ScalarField& b, double exclusion_radius,
                    const std::vector<Vec3>& exclusion_centers = {});

} // namespace regpois
