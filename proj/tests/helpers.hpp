#pragma once

// Shared test oracles, independent of the flux-form assembly path.

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "sqm/geometry.hpp"
#include "sqm/grid.hpp"
#include "sqm/jet.hpp"
#include "sqm/smallmat.hpp"
#include "sqm/surface.hpp"

namespace sqm::testing {

using ScalarField = std::function<Jet2(double s1, double s2)>;

/// Laplace-Beltrami of a scalar field from exact jets:
///   Delta_S psi = g^{ab} psi_{,ab} + (1/sqrt g) d_a(sqrt g g^{ab}) psi_{,b}
/// with metric derivatives assembled from second jets of the embedding,
/// d_c g_{ab} = x_{ca} . e_b + e_a . x_{cb}. No finite differences anywhere.
inline double laplace_beltrami_reference(const SurfacePatch& patch, const ScalarField& psi,
                                         double s1, double s2) {
    const std::array<Jet2, 3> x = patch.evaluate(s1, s2);
    const Vec3 e1{x[0].d1, x[1].d1, x[2].d1};
    const Vec3 e2{x[0].d2, x[1].d2, x[2].d2};
    const Vec3 x11{x[0].d11, x[1].d11, x[2].d11};
    const Vec3 x12{x[0].d12, x[1].d12, x[2].d12};
    const Vec3 x22{x[0].d22, x[1].d22, x[2].d22};

    Mat2 g;
    g.m[0][0] = dot(e1, e1);
    g.m[0][1] = dot(e1, e2);
    g.m[1][0] = g.m[0][1];
    g.m[1][1] = dot(e2, e2);
    const Mat2 gi = inverse(g);
    const double sg = std::sqrt(g.det());

    // d_c g as two matrices (c = 0, 1)
    const Vec3 d_e[2][2] = {{x11, x12}, {x12, x22}};  // d_c e_a
    Mat2 dg[2];
    const Vec3 e[2] = {e1, e2};
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                dg[c].m[a][b] = dot(d_e[c][a], e[b]) + dot(e[a], d_e[c][b]);

    // d_c g^{-1} = -g^{-1} (d_c g) g^{-1}; d_c sqrt g = sqrt g/2 tr(g^{-1} d_c g)
    Mat2 dgi[2];
    double dsg[2];
    for (int c = 0; c < 2; ++c) {
        dgi[c] = (gi * dg[c] * gi) * -1.0;
        dsg[c] = 0.5 * sg * (gi * dg[c]).trace();
    }

    const Jet2 p = psi(s1, s2);
    const double grad[2] = {p.d1, p.d2};
    const double hess[2][2] = {{p.d11, p.d12}, {p.d12, p.d22}};

    double result = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) result += gi.m[a][b] * hess[a][b];
    for (int b = 0; b < 2; ++b) {
        double div = 0.0;
        for (int a = 0; a < 2; ++a)
            div += dsg[a] * gi.m[a][b] + sg * dgi[a].m[a][b];
        result += div / sg * grad[b];
    }
    return result;
}

/// Sample a scalar field into a grid vector (row order of Grid2).
inline std::vector<double> sample_field(const Grid2& grid, const ScalarField& psi) {
    std::vector<double> v(grid.size());
    for (int j = 0; j < grid.n2; ++j)
        for (int i = 0; i < grid.n1; ++i) v[grid.row(i, j)] = psi(grid.s1(i), grid.s2(j)).v;
    return v;
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

inline double weighted_dot(const std::vector<double>& w, const std::vector<double>& a,
                           const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += w[i] * a[i] * b[i];
    return s;
}

inline double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s = std::max(s, std::abs(a[i] - b[i]));
    return s;
}

inline double norm2(const std::vector<double>& a) {
    double s = 0.0;
    for (double x : a) s += x * x;
    return std::sqrt(s);
}

} // namespace sqm::testing
