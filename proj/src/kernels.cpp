#include "regpois/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace regpois::kernels {

namespace {

// Stencil body shared by the parallel and serial variants so they cannot
// drift apart numerically.
template <bool Parallel>
void apply_stencil_impl(int n, double h, const double* fx, const double* fy, const double* fz,
                        const double* u, double* out) {
    const std::int64_t nn = n;
    const std::int64_t plane = nn * nn;
    const double inv_h2 = 1.0 / (h * h);

    // Boundary rows act as the identity.
#pragma omp parallel for schedule(static) if (Parallel)
    for (std::int64_t k = 0; k < nn; ++k) {
        const bool kface = (k == 0 || k == nn - 1);
        for (std::int64_t j = 0; j < nn; ++j) {
            const bool jface = kface || (j == 0 || j == nn - 1);
            const std::int64_t row = nn * j + plane * k;
            if (jface) {
                for (std::int64_t i = 0; i < nn; ++i)
                    out[row + i] = u[row + i];
                continue;
            }
            out[row] = u[row];
            out[row + nn - 1] = u[row + nn - 1];
            const double* fxrow = fx + (nn - 1) * (j + nn * k);
            const double* fyrow = fy + nn * (j + (nn - 1) * k);
            const double* fyrow_s = fy + nn * ((j - 1) + (nn - 1) * k);
            const double* fzrow = fz + nn * (j + nn * k);
            const double* fzrow_b = fz + nn * (j + nn * (k - 1));
            for (std::int64_t i = 1; i < nn - 1; ++i) {
                const std::int64_t c = row + i;
                const double uc = u[c];
                double acc = fxrow[i - 1] * (uc - u[c - 1]);
                acc += fxrow[i] * (uc - u[c + 1]);
                acc += fyrow_s[i] * (uc - u[c - nn]);
                acc += fyrow[i] * (uc - u[c + nn]);
                acc += fzrow_b[i] * (uc - u[c - plane]);
                acc += fzrow[i] * (uc - u[c + plane]);
                out[c] = acc * inv_h2;
            }
        }
    }
}

} // namespace

void apply_stencil(int n, double h, const double* fx, const double* fy, const double* fz,
                   const double* u, double* out) {
    apply_stencil_impl<true>(n, h, fx, fy, fz, u, out);
}

void apply_stencil_serial(int n, double h, const double* fx, const double* fy, const double* fz,
                          const double* u, double* out) {
    apply_stencil_impl<false>(n, h, fx, fy, fz, u, out);
}

double dot(const double* a, const double* b, std::int64_t len) {
    const std::int64_t nchunks = (len + kReductionChunk - 1) / kReductionChunk;
    std::vector<double> partial(static_cast<std::size_t>(nchunks), 0.0);
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::int64_t lo = c * kReductionChunk;
        const std::int64_t hi = std::min(lo + kReductionChunk, len);
        double s = 0.0;
        for (std::int64_t i = lo; i < hi; ++i)
            s += a[i] * b[i];
        partial[static_cast<std::size_t>(c)] = s;
    }
    double total = 0.0;
    for (double p : partial)
        total += p; // serial, in chunk order
    return total;
}

double dot_serial(const double* a, const double* b, std::int64_t len) {
    const std::int64_t nchunks = (len + kReductionChunk - 1) / kReductionChunk;
    double total = 0.0;
    for (std::int64_t c = 0; c < nchunks; ++c) {
        const std::int64_t lo = c * kReductionChunk;
        const std::int64_t hi = std::min(lo + kReductionChunk, len);
        double s = 0.0;
        for (std::int64_t i = lo; i < hi; ++i)
            s += a[i] * b[i];
        total += s;
    }
    return total;
}

double max_abs(const double* a, std::int64_t len) {
    double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
    for (std::int64_t i = 0; i < len; ++i)
        m = std::max(m, std::fabs(a[i]));
    return m;
}

void axpy(double alpha, const double* x, double* y, std::int64_t len) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < len; ++i)
        y[i] += alpha * x[i];
}

void xpay(const double* r, double beta, double* p, std::int64_t len) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < len; ++i)
        p[i] = r[i] + beta * p[i];
}

void copy(const double* src, double* dst, std::int64_t len) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < len; ++i)
        dst[i] = src[i];
}

void apply_diagonal(const double* diag_inv, const double* r, double* out, std::int64_t len) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < len; ++i)
        out[i] = diag_inv[i] * r[i];
}

} // namespace regpois::kernels
