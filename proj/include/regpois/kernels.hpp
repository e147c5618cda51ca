#pragma once

#include <cstdint>

// Hot array kernels behind the operator and the CG solver. Each has an
// OpenMP-parallel version (used everywhere) and a serial reference used by
// tests and the benchmark; the two are written to produce bit-identical
// results, which pins down the parallel implementations exactly.
//
// Reductions are chunked: fixed-size blocks are summed left to right and the
// per-block partials are combined serially in block order. The summation
// order is therefore independent of the thread count, so solver runs are
// reproducible bit for bit on any machine configuration.

namespace regpois::kernels {

inline constexpr std::int64_t kReductionChunk = 4096;

// Variable-coefficient 7-point stencil on the interior of an n^3 grid:
//   out[p] = (1/h^2) * sum over the 6 faces of eps_face * (u[p] - u[neighbor])
// Boundary entries are copied through (identity rows). fx/fy/fz hold the face
// permittivities normal to each axis; see operator.hpp for their layout.
void apply_stencil(int n, double h, const double* fx, const double* fy, const double* fz,
                   const double* u, double* out);
void apply_stencil_serial(int n, double h, const double* fx, const double* fy, const double* fz,
                          const double* u, double* out);

double dot(const double* a, const double* b, std::int64_t len);
double dot_serial(const double* a, const double* b, std::int64_t len);

double max_abs(const double* a, std::int64_t len);

// y = y + alpha * x
void axpy(double alpha, const double* x, double* y, std::int64_t len);

// p = r + beta * p
void xpay(const double* r, double beta, double* p, std::int64_t len);

void copy(const double* src, double* dst, std::int64_t len);

// out = diag_inv .* r  (elementwise)
void apply_diagonal(const double* diag_inv, const double* r, double* out, std::int64_t len);

} // namespace regpois::kernels
