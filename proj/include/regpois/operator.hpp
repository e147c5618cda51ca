#pragma once

#include <vector>

#include "regpois/charges.hpp"
#include "regpois/dielectric.hpp"
#include "regpois/grid.hpp"

namespace regpois {

// Matrix-free discretization of -div(eps grad u) in flux form: the action at
// an interior node is (1/h^2) * sum over its 6 faces of eps_face * (u_node -
// u_neighbor), with eps evaluated analytically at the face midpoints. Each
// geometric face is stored once, so the coefficient seen from both sides is
// identical and the operator is symmetric on fields vanishing at the
// boundary.
//
// Face storage, for an n^3 grid:
//   fx[i + (n-1)*(j + n*k)]  face between (i,j,k) and (i+1,j,k), i < n-1
//   fy[i + n*(j + (n-1)*k)]  face between (i,j,k) and (i,j+1,k), j < n-1
//   fz[i + n*(j + n*k)]      face between (i,j,k) and (i,j,k+1), k < n-1
struct VariableCoefficientOperator {
    Grid grid;
    std::vector<double> fx, fy, fz;
};

VariableCoefficientOperator build_operator(const Grid& g, const DielectricEvaluator& d);

// Boundary rows act as the identity: (A u) = u there.
ScalarField apply(const VariableCoefficientOperator& A, const ScalarField& u);

// Row diagonal of the folded interior system: sum of the 6 face coefficients
// over h^2 at interior nodes, 1.0 at boundary nodes.
std::vector<double> jacobi_diagonal(const VariableCoefficientOperator& A);

// Discrete Dirichlet problem with the boundary eliminated: interior equations
// A u = rhs, where rhs already contains the folded boundary terms, plus the
// boundary data itself for reassembling full-grid fields.
struct LinearSystem {
    VariableCoefficientOperator op;
    ScalarField rhs;             // interior entries only; zero on the boundary
    ScalarField boundary_values; // boundary entries only; zero in the interior
};

// Folds sys.boundary_values into sys.rhs (rhs += eps_face * g / h^2 at
// interior nodes next to the boundary) and clears the boundary entries of
// rhs. Called by the assemblers; public so custom systems, e.g. manufactured
// solutions, can reuse it.
void fold_boundary(LinearSystem& sys);

// System for the smooth reaction-field equation: source grad(eps).grad(G),
// boundary data g - G (far-field Coulomb minus the singular part).
LinearSystem assemble_regularized(const Grid& g, const DielectricEvaluator& d, const ChargeSet& c);

// System for the original equation with the charges spread trilinearly;
// boundary data is g itself.
LinearSystem assemble_trilinear(const Grid& g, const DielectricEvaluator& d, const ChargeSet& c);

} // namespace regpois
