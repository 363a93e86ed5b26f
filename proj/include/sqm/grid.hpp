#pragma once

#include <cstddef>
#include <vector>

#include "sqm/surface.hpp"

namespace sqm {

/// Uniform tensor grid over the parameter rectangle.
///
/// Periodic direction: n points at i*h, i = 0..n-1, h = L/n.
/// Dirichlet direction: n interior points at (i+1)*h, h = L/(n+1);
/// wall values are implicit zeros (ghost nodes).
/// Row indexing is j-major and frozen: row(i, j) = j*n1 + i.
struct Grid2 {
    int n1 = 0, n2 = 0;
    double h1 = 0, h2 = 0;
    double L1 = 0, L2 = 0;
    Boundary bc1 = Boundary::Dirichlet, bc2 = Boundary::Dirichlet;

    std::size_t size() const { return std::size_t(n1) * n2; }
    std::size_t row(int i, int j) const { return std::size_t(j) * n1 + i; }

    double s1(int i) const { return bc1 == Boundary::Periodic ? i * h1 : (i + 1) * h1; }
    double s2(int j) const { return bc2 == Boundary::Periodic ? j * h2 : (j + 1) * h2; }
};

Grid2 make_grid2(const SurfacePatch& patch, int n1, int n2);

/// Grid2 extended by nq interior Dirichlet layers across q in (-eps, eps),
/// hq = 2 eps/(nq+1). With nq odd the middle layer sits exactly at q = 0.
/// Row indexing is q-major and frozen: row(i, j, k) = k*n1*n2 + j*n1 + i.
struct Grid3 {
    Grid2 base;
    int nq = 0;
    double epsilon = 0;
    double hq = 0;

    std::size_t size() const { return base.size() * nq; }
    std::size_t row(int i, int j, int k) const { return base.size() * k + base.row(i, j); }

    double q(int k) const { return -epsilon + (k + 1) * hq; }
    int center_layer() const { return (nq - 1) / 2; }
};

Grid3 make_grid3(const SurfacePatch& patch, int n1, int n2, int nq, double epsilon);

} // namespace sqm
