#pragma once

#include <cstdint>
#include <vector>

#include "regpois/vec3.hpp"

namespace regpois {

// Uniform cubic grid of N x N x N nodes. Node (i,j,k) sits at
// lower_corner + h*(i,j,k); linear index is i + N*j + N*N*k (x fastest),
// which also fixes the stencil neighbor offsets to +-1, +-N, +-N*N.
struct Grid {
    Vec3 lower_corner;
    int n_per_axis = 0;
    double spacing = 0.0;

    std::int64_t node_count() const {
        auto n = static_cast<std::int64_t>(n_per_axis);
        return n * n * n;
    }
    std::int64_t linear_index(int i, int j, int k) const {
        auto n = static_cast<std::int64_t>(n_per_axis);
        return i + n * j + n * n * k;
    }
};

// Node-indexed scalar values on a Grid, stored x-fastest. Boundary nodes are
// stored too; solvers fix them to Dirichlet data and only iterate on the
// interior.
struct ScalarField {
    Grid grid;
    std::vector<double> values;

    explicit ScalarField(const Grid& g) : grid(g), values(g.node_count(), 0.0) {}

    double& at(int i, int j, int k) { return values[grid.linear_index(i, j, k)]; }
    double at(int i, int j, int k) const { return values[grid.linear_index(i, j, k)]; }
};

Grid make_grid(Vec3 lower, double extent, int n);

Vec3 node_position(const Grid& g, int i, int j, int k);

bool is_boundary(const Grid& g, int i, int j, int k);

} // namespace regpois
