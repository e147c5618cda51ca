#pragma once

#include <utility>
#include <vector>

#include "regpois/operator.hpp"

namespace regpois {

enum class Preconditioner { none, jacobi };

struct SolverConfig {
    double rel_tolerance = 1e-10;
    // 0 selects the default budget of 10 * n_per_axis iterations.
    int max_iterations = 0;
    Preconditioner preconditioner = Preconditioner::jacobi;
};

struct SolveReport {
    int iterations = 0;
    double final_relative_residual = 0.0;
    // One entry per iteration; on convergence the last entry is the true
    // residual recomputed from the returned solution, not the CG recursion
    // value, so final_relative_residual always certifies the output.
    std::vector<double> residual_history;
    double wall_time_seconds = 0.0;
    bool converged = true;
};

// Preconditioned conjugate gradients on the folded interior system. The
// returned field carries the solved interior values with the Dirichlet data
// written onto the boundary nodes. Non-convergence is reported through the
// flag, not an exception, so callers can still inspect the iterate.
std::pair<ScalarField, SolveReport> solve(const LinearSystem& sys, const SolverConfig& cfg = {});

} // namespace regpois
