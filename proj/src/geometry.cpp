#include "sqm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sqm/errors.hpp"

namespace sqm {

PointGeometry point_geometry(const SurfacePatch& patch, double s1, double s2) {
    const std::array<Jet2, 3> x = patch.evaluate(s1, s2);

    PointGeometry pg;
    pg.e1 = {x[0].d1, x[1].d1, x[2].d1};
    pg.e2 = {x[0].d2, x[1].d2, x[2].d2};
    const Vec3 x11{x[0].d11, x[1].d11, x[2].d11};
    const Vec3 x12{x[0].d12, x[1].d12, x[2].d12};
    const Vec3 x22{x[0].d22, x[1].d22, x[2].d22};

    const Vec3 n = cross(pg.e1, pg.e2);
    const double nn = norm(n);
    if (!(nn > patch.immersion_tol))
        throw GeometryError("degenerate immersion at (" + std::to_string(s1) + ", " +
                            std::to_string(s2) + "): |e1 x e2| = " + std::to_string(nn));
    pg.e3 = n / nn;

    pg.gS.m[0][0] = dot(pg.e1, pg.e1);
    pg.gS.m[0][1] = dot(pg.e1, pg.e2);
    pg.gS.m[1][0] = pg.gS.m[0][1];
    pg.gS.m[1][1] = dot(pg.e2, pg.e2);
    pg.det_gS = pg.gS.det();
    pg.sqrt_detgS = std::sqrt(pg.det_gS);
    pg.gS_inv = inverse(pg.gS);

    // d_a e3 analytically: n = e1 x e2, d_a n = x_{1a} x e2 + e1 x x_{2a},
    // d_a (n/|n|) = d_a n / |n| - n (n . d_a n)/|n|^3.
    const Vec3 dn1 = cross(x11, pg.e2) + cross(pg.e1, x12);
    const Vec3 dn2 = cross(x12, pg.e2) + cross(pg.e1, x22);
    pg.de3_1 = dn1 / nn - n * (dot(n, dn1) / (nn * nn * nn));
    pg.de3_2 = dn2 / nn - n * (dot(n, dn2) / (nn * nn * nn));

    // Solve gS . gamma_col(a) = [(d_a e3).e_b] for each column a.
    for (int a = 0; a < 2; ++a) {
        const Vec3& de3 = a == 0 ? pg.de3_1 : pg.de3_2;
        const double c1 = dot(de3, pg.e1);
        const double c2 = dot(de3, pg.e2);
        pg.gamma.m[0][a] = pg.gS_inv.m[0][0] * c1 + pg.gS_inv.m[0][1] * c2;
        pg.gamma.m[1][a] = pg.gS_inv.m[1][0] * c1 + pg.gS_inv.m[1][1] * c2;
    }

    pg.H = -0.5 * pg.gamma.trace();
    pg.K = pg.gamma.det();
    pg.geo_pot = pg.H * pg.H - pg.K;
    return pg;
}

double admissible_q(const PointGeometry& pg) {
    const auto lam = eigenvalues2(pg.gamma);
    const double kmax = std::max(std::abs(lam[0]), std::abs(lam[1]));
    return kmax > 0.0 ? 1.0 / kmax : std::numeric_limits<double>::infinity();
}

TubeGeometry tube_metric(const PointGeometry& pg, double q) {
    const double tr = pg.gamma.trace();
    const double det = pg.gamma.det();
    const double f = 1.0 + q * tr + q * q * det;
    // f > 0 on the connected component of q = 0 iff |q| stays below the
    // focal distance; f alone can turn positive again past a focal point.
    if (!(f > 0.0) || !(std::abs(q) < admissible_q(pg)))
        throw GeometryError("tube validity violated: f(q) = " + std::to_string(f) +
                            " at q = " + std::to_string(q) +
                            "; admissible |q| < " + std::to_string(admissible_q(pg)));

    TubeGeometry tg;
    tg.q = q;
    tg.f = f;

    const Mat2 gt = pg.gamma.transposed();
    tg.gSq = pg.gS + (gt * pg.gS + pg.gS * pg.gamma) * q + (gt * pg.gS * pg.gamma) * (q * q);
    tg.gSq_det = tg.gSq.det();
    tg.gTS_det = tg.gSq_det;  // block metric diag(gSq, 1)

    tg.E1 = pg.e1 + (pg.e1 * pg.gamma.m[0][0] + pg.e2 * pg.gamma.m[1][0]) * q;
    tg.E2 = pg.e2 + (pg.e1 * pg.gamma.m[0][1] + pg.e2 * pg.gamma.m[1][1]) * q;
    tg.E3 = pg.e3;
    return tg;
}

double det_identity_residual(const SurfacePatch& patch, double s1, double s2, double q) {
    const PointGeometry pg = point_geometry(patch, s1, s2);
    const TubeGeometry tg = tube_metric(pg, q);

    // Independent route: Gram matrix of the frame columns in E^3.
    Mat2 gram;
    gram.m[0][0] = dot(tg.E1, tg.E1);
    gram.m[0][1] = dot(tg.E1, tg.E2);
    gram.m[1][0] = gram.m[0][1];
    gram.m[1][1] = dot(tg.E2, tg.E2);
    const double gram_det = gram.det();
    const double mismatch = std::abs(gram_det - tg.gSq_det) / std::abs(gram_det);
    if (mismatch > 1e-8)
        throw GeometryError("tube metric vs frame Gram determinant mismatch: " +
                            std::to_string(mismatch));

    const double rhs = tg.f * tg.f * pg.det_gS;
    return std::abs(tg.gTS_det - rhs) / rhs;
}

} // namespace sqm
