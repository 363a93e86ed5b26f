#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sqm/geometry.hpp"
#include "sqm/grid.hpp"
#include "sqm/sparse.hpp"

namespace sqm {

/// Geometry sampled on the extended node set of a Grid2: interior nodes
/// plus one ring (Dirichlet walls at s = 0 and s = L; periodic indices
/// wrap to bitwise-identical interior samples). Extended indices run in
/// [-1, n]; all fields are flat arrays over that range.
struct GeometryCache {
    Grid2 grid;
    int stride = 0;  // n1 + 2
    std::vector<double> c11, c12, c22;  // sqrt(det gS) * gS^{ab}
    std::vector<double> w;              // sqrt(det gS)
    std::vector<double> pot;            // H^2 - K
    std::vector<double> gamma_tr, gamma_det;
    std::vector<double> adm_q;          // pointwise tube-validity bound

    std::size_t eidx(int i, int j) const {
        return std::size_t(j + 1) * stride + (i + 1);
    }
};

GeometryCache build_cache(const SurfacePatch& patch, const Grid2& grid);

/// Per-(extended node, q level) tube coefficients; levels run in [-1, nq]
/// covering the Dirichlet walls at q = -eps and +eps.
struct TubeCache {
    Grid3 grid;
    GeometryCache base;
    std::vector<double> C11, C12, C22;  // sqrt(det gS) f (gSq^{-1})^{ab}
    std::vector<double> Cq;             // sqrt(det gS) f
    std::vector<double> f;

    std::size_t eidx(int i, int j, int k) const {
        return std::size_t(k + 1) * base.stride * (grid.base.n2 + 2) + base.eidx(i, j);
    }
};

struct AssembleOptions {
    bool include_potential = true;  // 2D only: the -(H^2 - K) well
    bool flat_tube = false;         // 3D testing hook: force f = 1, gSq = gS
};

/// -Laplace-Beltrami - (H^2-K) in flux form; weight sqrt(det gS).
/// Units hbar^2/2m = 1, eigenvalues in 1/length^2.
struct Hamiltonian2D {
    SparseOperator op;
    Grid2 grid;
    std::shared_ptr<const GeometryCache> cache;
    std::string surface;
};

/// -Laplacian of the tube metric diag(gSq, 1), Dirichlet at q = +-eps;
/// weight sqrt(det gS) * f. No potential term: the geometric well emerges
/// only after conjugation and restriction.
struct Hamiltonian3D {
    SparseOperator op;
    Grid3 grid;
    std::shared_ptr<const TubeCache> cache;
    std::vector<double> f;  // per interior node, row order
    double epsilon = 0;
    std::string surface;
};

Hamiltonian2D assemble_h2d(const SurfacePatch& patch, const Grid2& grid,
                           const AssembleOptions& opt = {});
Hamiltonian3D assemble_h3d(const SurfacePatch& patch, const Grid3& grid,
                           const AssembleOptions& opt = {});

/// W^{1/2} A W^{-1/2}, explicitly symmetrized as (S + S^T)/2. The defect
/// is the pre-symmetrization max |S - S^T|. Eigenvalues are those of the
/// weighted problem; the result carries unit weight.
struct Symmetrized {
    SparseOperator op;
    double defect = 0;
};

Symmetrized symmetrize(const SparseOperator& a);

} // namespace sqm
