#include "sqm/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sqm/errors.hpp"
#include "sqm/geometry.hpp"

namespace sqm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::map<std::string, double> resolve_params(const CatalogInfo& info,
                                             const std::map<std::string, double>& given) {
    std::map<std::string, double> out;
    for (const auto& p : info.params) out[p.name] = p.default_value;
    for (const auto& [k, v] : given) {
        if (!out.count(k))
            throw ConfigError("surface '" + info.name + "' has no parameter '" + k + "'");
        out[k] = v;
    }
    return out;
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw ConfigError(msg);
}

Mat2 diag2(double a, double b) { return {{{a, 0.0}, {0.0, b}}}; }

} // namespace

const std::vector<CatalogInfo>& catalog_list() {
    static const std::vector<CatalogInfo> entries = {
        {"plane",
         "flat rectangle z = 0; Dirichlet x Dirichlet; H = K = 0",
         {{"L1", std::numbers::pi, "side length in s1"},
          {"L2", std::numbers::pi, "side length in s2"}},
         true},
        {"cylinder",
         "radius-R cylinder of length L; periodic x Dirichlet; K = 0, H^2-K = 1/(4R^2)",
         {{"R", 1.0, "radius"}, {"L", std::numbers::pi, "length"}},
         true},
        {"torus",
         "ring torus, s1 toroidal and s2 poloidal; periodic x periodic",
         {{"R", 2.0, "center-line radius"}, {"r", 1.0, "tube radius"}},
         true},
        {"sphere",
         "polar band of a radius-R sphere; Dirichlet x periodic; geometry only",
         {{"R", 1.0, "radius"}, {"band", 0.4, "polar angle margin avoiding the poles"}},
         false},
        {"catenoid",
         "catenoid of waist c, height L; Dirichlet x periodic; H = 0",
         {{"c", 1.0, "waist radius"}, {"L", 2.0, "height"}},
         true},
        {"corrugated",
         "graph z = a sin(k s1); Dirichlet x Dirichlet; K = 0",
         {{"a", 0.2, "corrugation amplitude"},
          {"k", 2.0, "corrugation wavenumber"},
          {"L1", std::numbers::pi, "side length in s1"},
          {"L2", std::numbers::pi, "side length in s2"}},
         true},
    };
    return entries;
}

CatalogEntry builtin(const std::string& name, const std::map<std::string, double>& params) {
    const CatalogInfo* info = nullptr;
    for (const auto& e : catalog_list())
        if (e.name == name) info = &e;
    if (!info) throw ConfigError("unknown surface preset '" + name + "'");

    const std::map<std::string, double> p = resolve_params(*info, params);

    CatalogEntry entry;
    entry.name = name;
    entry.params = p;
    entry.spectral_allowed = info->spectral_allowed;

    if (name == "plane") {
        const double L1 = p.at("L1"), L2 = p.at("L2");
        require(L1 > 0 && L2 > 0, "plane: side lengths must be positive");
        entry.patch = make_patch("plane", "s1", "s2", "0", L1, L2, Boundary::Dirichlet,
                                 Boundary::Dirichlet, {});
        entry.oracle_gS = [](double, double) { return Mat2::identity(); };
        entry.oracle_H = [](double, double) { return 0.0; };
        entry.oracle_K = [](double, double) { return 0.0; };
        entry.has_spectral_oracle = true;
    } else if (name == "cylinder") {
        const double R = p.at("R"), L = p.at("L");
        require(R > 0 && L > 0, "cylinder: R and L must be positive");
        entry.patch = make_patch("cylinder", "R*cos(s1)", "R*sin(s1)", "s2", kTwoPi, L,
                                 Boundary::Periodic, Boundary::Dirichlet, {{"R", R}});
        entry.oracle_gS = [R](double, double) { return diag2(R * R, 1.0); };
        entry.oracle_H = [R](double, double) { return -1.0 / (2.0 * R); };
        entry.oracle_K = [](double, double) { return 0.0; };
        entry.has_spectral_oracle = true;
    } else if (name == "torus") {
        const double R = p.at("R"), r = p.at("r");
        require(r > 0, "torus: r must be positive");
        require(r < R, "torus: requires 0 < r < R");
        entry.patch = make_patch("torus", "(R+r*cos(s2))*cos(s1)", "(R+r*cos(s2))*sin(s1)",
                                 "r*sin(s2)", kTwoPi, kTwoPi, Boundary::Periodic,
                                 Boundary::Periodic, {{"R", R}, {"r", r}});
        entry.oracle_gS = [R, r](double, double v) {
            const double ring = R + r * std::cos(v);
            return diag2(ring * ring, r * r);
        };
        entry.oracle_H = [R, r](double, double v) {
            const double cv = std::cos(v);
            return -(R + 2.0 * r * cv) / (2.0 * r * (R + r * cv));
        };
        entry.oracle_K = [R, r](double, double v) {
            const double cv = std::cos(v);
            return cv / (r * (R + r * cv));
        };
    } else if (name == "sphere") {
        const double R = p.at("R"), band = p.at("band");
        require(R > 0, "sphere: R must be positive");
        require(band > 0 && band < std::numbers::pi / 2,
                "sphere: band must lie in (0, pi/2)");
        // polar-in-s1 parametrization; e1 x e2 points outward so f = (1+q/R)^2
        entry.patch = make_patch("sphere", "R*sin(s1+v0)*cos(s2)", "R*sin(s1+v0)*sin(s2)",
                                 "R*cos(s1+v0)", std::numbers::pi - 2.0 * band, kTwoPi,
                                 Boundary::Dirichlet, Boundary::Periodic,
                                 {{"R", R}, {"v0", band}});
        entry.oracle_gS = [R, band](double s1, double) {
            const double su = std::sin(s1 + band);
            return diag2(R * R, R * R * su * su);
        };
        entry.oracle_H = [R](double, double) { return -1.0 / R; };
        entry.oracle_K = [R](double, double) { return 1.0 / (R * R); };
    } else if (name == "catenoid") {
        const double c = p.at("c"), L = p.at("L");
        require(c > 0 && L > 0, "catenoid: c and L must be positive");
        entry.patch = make_patch("catenoid", "c*cosh((s1-h)/c)*cos(s2)",
                                 "c*cosh((s1-h)/c)*sin(s2)", "s1-h", L, kTwoPi,
                                 Boundary::Dirichlet, Boundary::Periodic,
                                 {{"c", c}, {"h", L / 2.0}});
        entry.oracle_gS = [c, L](double s1, double) {
            const double ch = std::cosh((s1 - L / 2.0) / c);
            return diag2(ch * ch, c * c * ch * ch);
        };
        entry.oracle_H = [](double, double) { return 0.0; };
        entry.oracle_K = [c, L](double s1, double) {
            const double ch = std::cosh((s1 - L / 2.0) / c);
            return -1.0 / (c * c * ch * ch * ch * ch);
        };
    } else if (name == "corrugated") {
        const double a = p.at("a"), k = p.at("k");
        const double L1 = p.at("L1"), L2 = p.at("L2");
        require(L1 > 0 && L2 > 0, "corrugated: side lengths must be positive");
        // graph surfaces are always immersed, any (a, k) is valid
        entry.patch = make_patch("corrugated", "s1", "s2", "a*sin(k*s1)", L1, L2,
                                 Boundary::Dirichlet, Boundary::Dirichlet,
                                 {{"a", a}, {"k", k}});
        entry.oracle_gS = [a, k](double s1, double) {
            const double dp = a * k * std::cos(k * s1);
            return diag2(1.0 + dp * dp, 1.0);
        };
        entry.oracle_H = [a, k](double s1, double) {
            const double dp = a * k * std::cos(k * s1);
            const double ddp = -a * k * k * std::sin(k * s1);
            const double W2 = 1.0 + dp * dp;
            return ddp / (2.0 * W2 * std::sqrt(W2));
        };
        entry.oracle_K = [](double, double) { return 0.0; };
    }

    return entry;
}

namespace {

// Smallest k values of a separable two-index family, enumerated far enough
// past the cutoff to be exhaustive.
std::vector<double> k_smallest(const std::function<double(int, int)>& term, int m_lo, int n_lo,
                               bool double_m, int k) {
    std::vector<double> vals;
    const int M = 4 * k + 16;
    for (int m = m_lo; m - m_lo < M; ++m) {
        for (int n = n_lo; n - n_lo < M; ++n) {
            vals.push_back(term(m, n));
            if (double_m && m > m_lo) vals.push_back(term(m, n));
        }
    }
    std::sort(vals.begin(), vals.end());
    vals.resize(k);
    return vals;
}

} // namespace

std::vector<double> spectral_oracle(const CatalogEntry& entry, int k) {
    const auto& p = entry.params;
    if (entry.name == "plane") {
        const double L1 = p.at("L1"), L2 = p.at("L2");
        return k_smallest(
            [&](int m, int n) {
                const double a = m * std::numbers::pi / L1;
                const double b = n * std::numbers::pi / L2;
                return a * a + b * b;
            },
            1, 1, false, k);
    }
    if (entry.name == "cylinder") {
        const double R = p.at("R"), L = p.at("L");
        return k_smallest(
            [&](int m, int n) {
                const double b = n * std::numbers::pi / L;
                return double(m) * m / (R * R) + b * b - 1.0 / (4.0 * R * R);
            },
            0, 1, true, k);
    }
    throw ConfigError("no spectral oracle for surface '" + entry.name + "'");
}

std::vector<double> discrete_spectral_oracle(const CatalogEntry& entry, const Grid2& grid,
                                             int k) {
    auto dirichlet_mode = [](double h, double L, int n) {
        const double s = std::sin(n * std::numbers::pi * h / (2.0 * L));
        return 4.0 / (h * h) * s * s;
    };
    auto periodic_mode = [](double h, int nn, int m) {
        const double s = std::sin(m * std::numbers::pi / nn);
        return 4.0 / (h * h) * s * s;
    };

    if (entry.name == "plane") {
        std::vector<double> vals;
        for (int m = 1; m <= grid.n1; ++m)
            for (int n = 1; n <= grid.n2; ++n)
                vals.push_back(dirichlet_mode(grid.h1, grid.L1, m) +
                               dirichlet_mode(grid.h2, grid.L2, n));
        std::sort(vals.begin(), vals.end());
        vals.resize(std::min<std::size_t>(k, vals.size()));
        return vals;
    }
    if (entry.name == "cylinder") {
        const double R = entry.params.at("R");
        std::vector<double> vals;
        for (int m = 0; m < grid.n1; ++m)
            for (int n = 1; n <= grid.n2; ++n)
                vals.push_back(periodic_mode(grid.h1, grid.n1, m) / (R * R) +
                               dirichlet_mode(grid.h2, grid.L2, n) - 1.0 / (4.0 * R * R));
        std::sort(vals.begin(), vals.end());
        vals.resize(std::min<std::size_t>(k, vals.size()));
        return vals;
    }
    throw ConfigError("no discrete spectral oracle for surface '" + entry.name + "'");
}

double admissible_epsilon(const SurfacePatch& patch, int ns1, int ns2) {
    double bound = std::numeric_limits<double>::infinity();
    for (int j = 0; j < ns2; ++j) {
        for (int i = 0; i < ns1; ++i) {
            const double s1 = (i + 0.5) * patch.L1 / ns1;
            const double s2 = (j + 0.5) * patch.L2 / ns2;
            bound = std::min(bound, admissible_q(point_geometry(patch, s1, s2)));
        }
    }
    return bound;
}

double admissible_epsilon_via_roots(const SurfacePatch& patch, int ns1, int ns2) {
    double bound = std::numeric_limits<double>::infinity();
    for (int j = 0; j < ns2; ++j) {
        for (int i = 0; i < ns1; ++i) {
            const double s1 = (i + 0.5) * patch.L1 / ns1;
            const double s2 = (j + 0.5) * patch.L2 / ns2;
            const PointGeometry pg = point_geometry(patch, s1, s2);
            // roots of det(gamma) q^2 + tr(gamma) q + 1 = 0 in the
            // cancellation-free form 2/(-tr -+ sqrt(disc)); K = 0 sends one
            // root to infinity without special casing
            const double tr = pg.gamma.trace();
            double disc = tr * tr - 4.0 * pg.gamma.det();
            disc = disc < 0 ? 0 : disc;  // equals (k1 - k2)^2, clamp roundoff
            const double s = std::sqrt(disc);
            for (const double denom : {-tr + s, -tr - s}) {
                if (denom != 0.0) bound = std::min(bound, std::abs(2.0 / denom));
            }
        }
    }
    return bound;
}

} // namespace sqm
