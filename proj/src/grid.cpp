#include "regpois/grid.hpp"

#include <stdexcept>
#include <string>

namespace regpois {

Grid make_grid(Vec3 lower, double extent, int n) {
    if (n < 3)
        throw std::invalid_argument("make_grid: need at least 3 nodes per axis, got " +
                                    std::to_string(n));
    if (!(extent > 0.0))
        throw std::invalid_argument("make_grid: extent must be positive");
    Grid g;
    g.lower_corner = lower;
    g.n_per_axis = n;
    g.spacing = extent / (n - 1);
    return g;
}

Vec3 node_position(const Grid& g, int i, int j, int k) {
    const int n = g.n_per_axis;
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
        throw std::out_of_range("node_position: index outside grid");
    const double h = g.spacing;
    return {g.lower_corner.x + h * i, g.lower_corner.y + h * j, g.lower_corner.z + h * k};
}

bool is_boundary(const Grid& g, int i, int j, int k) {
    const int n = g.n_per_axis;
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
        throw std::out_of_range("is_boundary: index outside grid");
    const int last = n - 1;
    return i == 0 || j == 0 || k == 0 || i == last || j == last || k == last;
}

} // namespace regpois
