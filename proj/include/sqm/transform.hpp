#pragma once

#include <string>
#include <vector>

#include "sqm/assemble.hpp"
#include "sqm/grid.hpp"
#include "sqm/sparse.hpp"

namespace sqm {

enum class WeightKind { FlatInQ, Tube };

/// A finite-dimensional inner-product space <u,v>_w = sum w_i u_i v_i.
/// Tube-weighted: w = sqrt(det gS) * f (the measure of the tube metric);
/// flat-in-q: w = sqrt(det gS), constant across q layers.
struct WeightedSpace {
    WeightKind kind = WeightKind::FlatInQ;
    std::vector<double> w;
    std::string label;
};

WeightedSpace make_flat_space(const Hamiltonian3D& h);
WeightedSpace make_tube_space(const Hamiltonian3D& h);

/// The diagonal map f^{1/2} and its inverse: the non-unitary rescaling that
/// transports tube-weighted states to flat-in-q ones.
struct ConjugationMap {
    std::vector<double> half;      // f^{1/2}
    std::vector<double> inv_half;  // f^{-1/2}
};

ConjugationMap make_conjugation(const Hamiltonian3D& h);

/// A* = W^{-1} A^T W, the unique matrix with <A* u, v>_w = <u, A v>_w.
SparseOperator weighted_adjoint(const SparseOperator& a, const WeightedSpace& space);

/// L = F^{1/2} A F^{-1/2}. L is self-adjoint for the flat-in-q weight
/// whenever A was self-adjoint for the tube weight; the measured relative
/// defect is returned (values noticeably above 1e-10 signal an assembly bug).
struct SelfAdjointized {
    SparseOperator op;         // carries the flat-in-q weight
    double flat_defect = 0;    // max |W L - L^T W| / max |W L|
};

SelfAdjointized selfadjointize(const Hamiltonian3D& h);

/// Real antisymmetric centered difference D_q; the normal momentum is
/// i D_q, and p_q-self-adjointness questions become D_q-antisymmetry
/// questions under the given weight (no complex storage).
SparseOperator normal_momentum(const Grid3& grid);

/// Averaging over q layers replicated across layers: the orthogonal
/// projection onto q-constant vectors. Exactly idempotent; a *-algebra
/// projection under the flat weight only.
SparseOperator kernel_projection(const Grid3& grid);

/// Embed a 2D vector as a q-constant and read the q = 0 layer of L applied
/// to it (`layer` < 0 selects the central layer; nq must be odd for that).
std::vector<double> restrict_to_surface(const SparseOperator& L, const Grid3& grid,
                                        const std::vector<double>& test, int layer = -1);

} // namespace sqm
