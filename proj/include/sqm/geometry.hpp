#pragma once

#include "sqm/smallmat.hpp"
#include "sqm/surface.hpp"

namespace sqm {

/// Pointwise first/second fundamental data of a patch.
///
/// Sign conventions (fixed for the whole artifact):
///   e3 = e1 x e2 / |e1 x e2|
///   d_a e3 = gamma^b_a e_b         (gamma = shape tensor, mixed indices)
///   H = -tr(gamma)/2,  K = det(gamma)
/// so the tube weight is f(q) = det(I + q gamma) = 1 - 2Hq + Kq^2 and the
/// geometric potential H^2 - K = ((k1-k2)/2)^2 is orientation-free.
struct PointGeometry {
    Vec3 e1, e2;        // tangent vectors d_a x
    Vec3 e3;            // unit normal
    Vec3 de3_1, de3_2;  // d_a e3, analytic from second jets
    Mat2 gS;            // first fundamental form
    Mat2 gS_inv;
    double det_gS = 0;
    double sqrt_detgS = 0;
    Mat2 gamma;         // gamma.m[b][a] = coefficient of e_b in d_a e3
    double H = 0;       // mean curvature, 1/length
    double K = 0;       // Gauss curvature, 1/length^2
    double geo_pot = 0; // H^2 - K >= 0
};

/// Tube (normal-offset) data at signed normal distance q.
struct TubeGeometry {
    double q = 0;
    Mat2 gSq;             // induced metric of the offset surface S_q
    double gSq_det = 0;
    double gTS_det = 0;   // determinant of the 3x3 block metric diag(gSq, 1)
    double f = 0;         // det(I + q gamma) = 1 + q tr(gamma) + q^2 det(gamma)
    Vec3 E1, E2, E3;      // moving frame of the tube point
};

PointGeometry point_geometry(const SurfacePatch& patch, double s1, double s2);

/// Largest |q| with f > 0 at this point: 1 / max |principal curvature|.
double admissible_q(const PointGeometry& pg);

/// Requires f(q) > 0; throws GeometryError reporting the admissible range.
TubeGeometry tube_metric(const PointGeometry& pg, double q);

/// Relative residual |det gSq - f^2 det gS| / (f^2 det gS). Internally
/// cross-checks det gSq against the Gram determinant of the frame columns
/// E_a (an independent route); a mismatch beyond 1e-8 throws.
double det_identity_residual(const SurfacePatch& patch, double s1, double s2, double q);

} // namespace sqm
