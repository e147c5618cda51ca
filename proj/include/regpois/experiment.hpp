#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "regpois/cg.hpp"
#include "regpois/charges.hpp"
#include "regpois/dielectric.hpp"
#include "regpois/grid.hpp"
#include "regpois/radial.hpp"

namespace regpois {

enum class Method { regularized, trilinear, both };

// One experiment: solve on the fixed box [-10,10]^3 for each requested grid
// size, with a two-sphere tanh dielectric and a set of point charges.
struct ExperimentConfig {
    std::vector<int> grid_sizes{50, 100, 200, 400};
    Method method = Method::both;
    double inner_radius = 2.0;
    double outer_radius = 5.0;
    double steepness = 6.0;
    double level_inside = 1.0;
    double level_outside = 0.0;
    double eps_interior = 1.0;
    double eps_exterior = 80.0;
    ChargeSet charges{{PointCharge{Vec3{0.0, 0.0, 0.0}, 1.0}}};
    SolverConfig solver;
    std::string output_dir = ".";
};

// Domain half-width of the experiment box (the benchmark [-10,10]^3 cube).
inline constexpr double kBoxHalfWidth = 10.0;

struct ComparisonRow {
    int n = 0;
    double h = 0.0;
    std::string pair;      // "RF_vs_TL" or "RF_vs_oracle"
    std::string norm_name; // "L2" or "Linf"
    double value = 0.0;
};

struct RegularizedRun {
    ScalarField u_rf;    // smooth reaction-field solution
    ScalarField u_total; // u_rf + singular part, the recovered potential
    SolveReport report;
};

struct TrilinearRun {
    ScalarField u;    // raw solution with trilinearly spread charges
    ScalarField u_tl; // u minus the singular part, comparable to u_rf
    SolveReport report;
};

// Thrown by convergence_study when a linear solve exhausts its budget; the
// CLI maps it to a dedicated exit code.
struct SolverDivergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

TanhSphericalDielectric make_dielectric(const ExperimentConfig& cfg);
Grid make_experiment_grid(int n);

RegularizedRun run_regularized(const ExperimentConfig& cfg, int n);
TrilinearRun run_trilinear(const ExperimentConfig& cfg, int n);

// Full study at cfg.grid_sizes: regularized-vs-trilinear and
// regularized-vs-oracle norms per size, written to
// <output_dir>/convergence.csv with observed orders (log2 of successive value
// ratios) appended. Requires method = both and a single centered charge, the
// only configuration whose exact radial reduction is available.
std::vector<ComparisonRow> convergence_study(const ExperimentConfig& cfg);

// Radial reference for cfg's dielectric, extended far enough to cover the
// whole cube including corners.
RadialProfile cube_oracle(const ExperimentConfig& cfg);

// Linf error of the solved field against u(x,y,z) = sin(pi x/10) sin(pi y/10)
// sin(pi z/10) with the matching analytic right-hand side, on an n^3 grid.
// Used to measure the observed order of the discretization under a given
// dielectric.
double manufactured_solution_error(const DielectricEvaluator& d, int n,
                                   const SolverConfig& solver = {});

} // namespace regpois
