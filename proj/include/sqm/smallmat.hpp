#pragma once

#include <array>
#include <cmath>

namespace sqm {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double c) const { return {x * c, y * c, z * c}; }
    Vec3 operator/(double c) const { return {x / c, y / c, z / c}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Row-major 2x2 matrix; m[r][c].
struct Mat2 {
    double m[2][2] = {{0, 0}, {0, 0}};

    static Mat2 identity() { return {{{1, 0}, {0, 1}}}; }

    double trace() const { return m[0][0] + m[1][1]; }
    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

    Mat2 transposed() const { return {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}}; }

    Mat2 operator+(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
        return r;
    }
    Mat2 operator*(double c) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] * c;
        return r;
    }
    Mat2 operator*(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
        return r;
    }
};

inline Mat2 inverse(const Mat2& a) {
    const double d = a.det();
    return {{{a.m[1][1] / d, -a.m[0][1] / d}, {-a.m[1][0] / d, a.m[0][0] / d}}};
}

/// Eigenvalues of a (not necessarily symmetric) real 2x2 with real spectrum;
/// used for principal-curvature bounds of the shape operator.
inline std::array<double, 2> eigenvalues2(const Mat2& a) {
    const double tr = a.trace(), det = a.det();
    double disc = tr * tr / 4.0 - det;
    if (disc < 0.0) disc = 0.0;  // symmetric-like inputs; clamp roundoff
    const double s = std::sqrt(disc);
    return {tr / 2.0 - s, tr / 2.0 + s};
}

} // namespace sqm
