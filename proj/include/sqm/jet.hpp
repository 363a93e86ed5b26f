#pragma once

#include <cmath>
#include <cstdlib>

#include "sqm/errors.hpp"

namespace sqm {

/// Second-order forward-mode jet in the two surface parameters (s1, s2).
///
/// Carries the value, the gradient and the symmetric Hessian of a scalar;
/// arithmetic implements the truncated second-order Taylor algebra, e.g.
///   (fg).d12 = f.d12 g + f.d1 g.d2 + f.d2 g.d1 + f g.d12.
/// Mixed-partial symmetry is structural: there is a single d12 slot.
struct Jet2 {
    double v = 0.0;
    double d1 = 0.0, d2 = 0.0;
    double d11 = 0.0, d12 = 0.0, d22 = 0.0;

    static Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
    static Jet2 var1(double s1) { return {s1, 1, 0, 0, 0, 0}; }
    static Jet2 var2(double s2) { return {s2, 0, 1, 0, 0, 0}; }

    Jet2 operator-() const { return {-v, -d1, -d2, -d11, -d12, -d22}; }

    Jet2& operator+=(const Jet2& o) {
        v += o.v; d1 += o.d1; d2 += o.d2;
        d11 += o.d11; d12 += o.d12; d22 += o.d22;
        return *this;
    }
    Jet2& operator-=(const Jet2& o) {
        v -= o.v; d1 -= o.d1; d2 -= o.d2;
        d11 -= o.d11; d12 -= o.d12; d22 -= o.d22;
        return *this;
    }
    Jet2& operator*=(double c) {
        v *= c; d1 *= c; d2 *= c;
        d11 *= c; d12 *= c; d22 *= c;
        return *this;
    }
};

inline Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
inline Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
inline Jet2 operator+(Jet2 a, double c) { a.v += c; return a; }
inline Jet2 operator+(double c, Jet2 a) { a.v += c; return a; }
inline Jet2 operator-(Jet2 a, double c) { a.v -= c; return a; }
inline Jet2 operator-(double c, const Jet2& a) { return Jet2::constant(c) - a; }
inline Jet2 operator*(Jet2 a, double c) { return a *= c; }
inline Jet2 operator*(double c, Jet2 a) { return a *= c; }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 r;
    r.v = a.v * b.v;
    r.d1 = a.d1 * b.v + a.v * b.d1;
    r.d2 = a.d2 * b.v + a.v * b.d2;
    r.d11 = a.d11 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d11;
    r.d12 = a.d12 * b.v + a.d1 * b.d2 + a.d2 * b.d1 + a.v * b.d12;
    r.d22 = a.d22 * b.v + 2.0 * a.d2 * b.d2 + a.v * b.d22;
    return r;
}

/// Chain rule for a scalar function u applied to a jet g, given
/// u0 = u(g.v), u1 = u'(g.v), u2 = u''(g.v).
inline Jet2 compose(const Jet2& g, double u0, double u1, double u2) {
    Jet2 r;
    r.v = u0;
    r.d1 = u1 * g.d1;
    r.d2 = u1 * g.d2;
    r.d11 = u2 * g.d1 * g.d1 + u1 * g.d11;
    r.d12 = u2 * g.d1 * g.d2 + u1 * g.d12;
    r.d22 = u2 * g.d2 * g.d2 + u1 * g.d22;
    return r;
}

/// Bivariate chain rule for u(f, g) with the six partials of u at
/// (f.v, g.v): value, u_f, u_g, u_ff, u_fg, u_gg.
inline Jet2 compose2(const Jet2& f, const Jet2& g, double u0, double uf, double ug,
                     double uff, double ufg, double ugg) {
    Jet2 r;
    r.v = u0;
    r.d1 = uf * f.d1 + ug * g.d1;
    r.d2 = uf * f.d2 + ug * g.d2;
    r.d11 = uff * f.d1 * f.d1 + 2.0 * ufg * f.d1 * g.d1 + ugg * g.d1 * g.d1
            + uf * f.d11 + ug * g.d11;
    r.d12 = uff * f.d1 * f.d2 + ufg * (f.d1 * g.d2 + f.d2 * g.d1) + ugg * g.d1 * g.d2
            + uf * f.d12 + ug * g.d12;
    r.d22 = uff * f.d2 * f.d2 + 2.0 * ufg * f.d2 * g.d2 + ugg * g.d2 * g.d2
            + uf * f.d22 + ug * g.d22;
    return r;
}

inline Jet2 inverse(const Jet2& g) {
    if (g.v == 0.0) throw EvalError("division by zero");
    const double iv = 1.0 / g.v;
    return compose(g, iv, -iv * iv, 2.0 * iv * iv * iv);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inverse(b); }
inline Jet2 operator/(Jet2 a, double c) { return a *= (1.0 / c); }
inline Jet2 operator/(double c, const Jet2& b) { return inverse(b) * c; }

inline Jet2 sin(const Jet2& g) {
    const double s = std::sin(g.v), c = std::cos(g.v);
    return compose(g, s, c, -s);
}
inline Jet2 cos(const Jet2& g) {
    const double s = std::sin(g.v), c = std::cos(g.v);
    return compose(g, c, -s, -c);
}
inline Jet2 tan(const Jet2& g) {
    const double t = std::tan(g.v), sec2 = 1.0 + t * t;
    return compose(g, t, sec2, 2.0 * t * sec2);
}
inline Jet2 sinh(const Jet2& g) {
    const double s = std::sinh(g.v), c = std::cosh(g.v);
    return compose(g, s, c, s);
}
inline Jet2 cosh(const Jet2& g) {
    const double s = std::sinh(g.v), c = std::cosh(g.v);
    return compose(g, c, s, c);
}
inline Jet2 tanh(const Jet2& g) {
    const double t = std::tanh(g.v), sech2 = 1.0 - t * t;
    return compose(g, t, sech2, -2.0 * t * sech2);
}
inline Jet2 exp(const Jet2& g) {
    const double e = std::exp(g.v);
    return compose(g, e, e, e);
}
inline Jet2 log(const Jet2& g) {
    if (!(g.v > 0.0)) throw EvalError("log of non-positive value");
    const double iv = 1.0 / g.v;
    return compose(g, std::log(g.v), iv, -iv * iv);
}
inline Jet2 sqrt(const Jet2& g) {
    if (g.v < 0.0) throw EvalError("sqrt of negative value");
    const double s = std::sqrt(g.v);
    // Derivatives blow up at 0; IEEE inf/nan propagate, only the sign is policed.
    return compose(g, s, 0.5 / s, -0.25 / (s * g.v));
}
// |x| with the convention sign(0) = 0 at the kink.
inline Jet2 abs(const Jet2& g) {
    const double sgn = g.v > 0.0 ? 1.0 : (g.v < 0.0 ? -1.0 : 0.0);
    return compose(g, std::abs(g.v), sgn, 0.0);
}

inline Jet2 atan2(const Jet2& y, const Jet2& x) {
    const double r2 = x.v * x.v + y.v * y.v;
    if (r2 == 0.0) throw EvalError("atan2 at the origin");
    const double r4 = r2 * r2;
    return compose2(y, x, std::atan2(y.v, x.v),
                    x.v / r2, -y.v / r2,
                    -2.0 * x.v * y.v / r4, (y.v * y.v - x.v * x.v) / r4,
                    2.0 * x.v * y.v / r4);
}

inline bool jet_is_constant(const Jet2& g) {
    return g.d1 == 0.0 && g.d2 == 0.0 && g.d11 == 0.0 && g.d12 == 0.0 && g.d22 == 0.0;
}

/// Integer power by repeated multiplication; exact for negative bases.
inline Jet2 ipow(const Jet2& base, long long n) {
    if (n == 0) return Jet2::constant(1.0);
    if (n < 0) return inverse(ipow(base, -n));
    Jet2 acc = base;
    Jet2 result = Jet2::constant(1.0);
    long long e = n;
    while (e > 0) {
        if (e & 1) result = result * acc;
        e >>= 1;
        if (e) acc = acc * acc;
    }
    return result;
}

/// ^ semantics: exponents that are (numerically) integers use
/// repeated-multiplication jets and allow any base; everything else
/// requires a positive base.
inline Jet2 pow(const Jet2& base, const Jet2& expo) {
    if (jet_is_constant(expo)) {
        const double e = expo.v;
        if (std::abs(e - std::llround(e)) < 1e-12) return ipow(base, std::llround(e));
        if (!(base.v > 0.0))
            throw EvalError("non-integer power of a non-positive base");
        const double u0 = std::pow(base.v, e);
        return compose(base, u0, e * std::pow(base.v, e - 1.0),
                       e * (e - 1.0) * std::pow(base.v, e - 2.0));
    }
    if (!(base.v > 0.0))
        throw EvalError("non-positive base with variable exponent");
    return exp(expo * log(base));
}

} // namespace sqm
