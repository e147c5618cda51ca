#include "regpois/cg.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "regpois/kernels.hpp"

namespace regpois {

namespace {

void precondition(Preconditioner pc, const std::vector<double>& diag_inv,
                  const std::vector<double>& r, std::vector<double>& z) {
    if (pc == Preconditioner::jacobi) {
        kernels::apply_diagonal(diag_inv.data(), r.data(), z.data(), r.size());
    } else {
        kernels::copy(r.data(), z.data(), r.size());
    }
}

} // namespace

std::pair<ScalarField, SolveReport> solve(const LinearSystem& sys, const SolverConfig& cfg) {
    if (cfg.rel_tolerance <= 0.0 || cfg.rel_tolerance >= 1.0) {
        throw std::invalid_argument("solver: rel_tolerance must lie in (0, 1)");
    }
    if (cfg.max_iterations < 0) throw std::invalid_argument("solver: max_iterations must be non-negative");

    const Grid& g = sys.op.grid;
    const int n = g.n_per_axis;
    const std::size_t N = g.node_count();
    const int max_iter = cfg.max_iterations > 0 ? cfg.max_iterations : 10 * n;
    const std::vector<double>& b = sys.rhs.values;

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&t0] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    ScalarField out(g);
    SolveReport rep;

    const double norm_b = std::sqrt(kernels::dot(b.data(), b.data(), N));
    if (norm_b == 0.0) {
        // Nothing to solve; the interior stays zero.
        kernels::copy(sys.boundary_values.values.data(), out.values.data(), N);
        rep.residual_history.push_back(0.0);
        rep.wall_time_seconds = elapsed();
        return {std::move(out), rep};
    }

    std::vector<double> diag_inv;
    if (cfg.preconditioner == Preconditioner::jacobi) {
        diag_inv = jacobi_diagonal(sys.op);
        for (double& d : diag_inv) d = 1.0 / d;
    }

    // Krylov vectors are zero on boundary nodes throughout: b is folded, and
    // the identity rows of the stencil keep A p zero there too.
    std::vector<double> x(N, 0.0), r(N), z(N), p(N), q(N);
    kernels::copy(b.data(), r.data(), N);
    precondition(cfg.preconditioner, diag_inv, r, z);
    kernels::copy(z.data(), p.data(), N);
    double rz = kernels::dot(r.data(), z.data(), N);

    bool converged = false;
    int it = 0;
    while (it < max_iter) {
        ++it;
        kernels::apply_stencil(n, g.spacing, sys.op.fx.data(), sys.op.fy.data(), sys.op.fz.data(),
                               p.data(), q.data());
        const double pq = kernels::dot(p.data(), q.data(), N);
        if (!(pq > 0.0)) break; // loss of positive definiteness; bail with the current iterate
        const double alpha = rz / pq;
        kernels::axpy(alpha, p.data(), x.data(), N);
        kernels::axpy(-alpha, q.data(), r.data(), N);

        const double rel = std::sqrt(kernels::dot(r.data(), r.data(), N)) / norm_b;
        rep.residual_history.push_back(rel);
        if (rel <= cfg.rel_tolerance) {
            // certify against the true residual before accepting
            kernels::apply_stencil(n, g.spacing, sys.op.fx.data(), sys.op.fy.data(),
                                   sys.op.fz.data(), x.data(), q.data());
            kernels::copy(b.data(), r.data(), N);
            kernels::axpy(-1.0, q.data(), r.data(), N);
            const double rel_true = std::sqrt(kernels::dot(r.data(), r.data(), N)) / norm_b;
            rep.residual_history.push_back(rel_true);
            if (rel_true <= cfg.rel_tolerance) {
                converged = true;
                break;
            }
            // recursion drifted from the true residual: restart from r
            precondition(cfg.preconditioner, diag_inv, r, z);
            kernels::copy(z.data(), p.data(), N);
            rz = kernels::dot(r.data(), z.data(), N);
            continue;
        }

        precondition(cfg.preconditioner, diag_inv, r, z);
        const double rz_new = kernels::dot(r.data(), z.data(), N);
        const double beta = rz_new / rz;
        kernels::xpay(z.data(), beta, p.data(), N); // p = z + beta p
        rz = rz_new;
    }

    if (!converged) {
        kernels::apply_stencil(n, g.spacing, sys.op.fx.data(), sys.op.fy.data(), sys.op.fz.data(),
                               x.data(), q.data());
        kernels::copy(b.data(), r.data(), N);
        kernels::axpy(-1.0, q.data(), r.data(), N);
        rep.residual_history.push_back(std::sqrt(kernels::dot(r.data(), r.data(), N)) / norm_b);
    }

    rep.iterations = it;
    rep.converged = converged;
    rep.final_relative_residual = rep.residual_history.back();

    kernels::copy(x.data(), out.values.data(), N);
    const int nn = n;
    for (int k = 0; k < nn; ++k) {
        for (int j = 0; j < nn; ++j) {
            for (int i = 0; i < nn; ++i) {
                if (is_boundary(g, i, j, k)) {
                    out.values[g.linear_index(i, j, k)] =
                        sys.boundary_values.values[g.linear_index(i, j, k)];
                }
            }
        }
    }
    rep.wall_time_seconds = elapsed();
    return {std::move(out), rep};
}

} // namespace regpois
