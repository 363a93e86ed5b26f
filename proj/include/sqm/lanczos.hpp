#pragma once

#include <cstdint>
#include <vector>

#include "sqm/sparse.hpp"

namespace sqm {

/// Converged lower-edge eigenpairs of a symmetric operator.
struct Spectrum {
    std::vector<double> eigenvalues;               // ascending, units 1/length^2
    std::vector<std::vector<double>> eigenvectors; // unit norm in the operator's inner product
    std::vector<double> residuals;                 // ||A v - lambda v|| / ||A||_est
    int iterations = 0;
    std::uint64_t seed = 0;
    bool converged = false;
    double op_norm_est = 0;
};

/// Lanczos with full reorthogonalization, lower-edge Ritz extraction from
/// the tridiagonal (no shift-invert, no linear solves). Deterministic for a
/// fixed seed. `exclude_constant` keeps the Krylov space orthogonal to the
/// constant vector; only meaningful when the operator annihilates constants
/// (fully periodic Laplacians).
///
/// Requires an entrywise-symmetric matrix (post-symmetrize). Throws
/// SolverError on k > n; non-convergence returns partial results flagged
/// with converged = false.
Spectrum smallest_eigenpairs(const SparseOperator& op, int k, double tol, std::uint64_t seed,
                             int max_iter, bool exclude_constant = false);

/// Independent residual recomputation ||A v - lambda v|| / ||A||_est.
std::vector<double> residual_report(const SparseOperator& op, const Spectrum& spec);

namespace detail {

/// Implicit-shift QL for a symmetric tridiagonal matrix (diagonal d,
/// subdiagonal e). Eigenvalues replace d (ascending). When z is non-null
/// it must hold an m x m row-major identity on entry; its columns become
/// the matching eigenvectors.
void tridiag_eigen(std::vector<double>& d, std::vector<double>& e, std::vector<double>* z,
                   int m);

} // namespace detail

} // namespace sqm
