#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sqm/grid.hpp"
#include "sqm/smallmat.hpp"
#include "sqm/surface.hpp"

namespace sqm {

/// A built-in surface with closed-form geometry oracles. Oracles are direct
/// formulas, independent of the jet evaluation path, and carry the
/// artifact's sign convention for H.
struct CatalogEntry {
    std::string name;
    std::map<std::string, double> params;  // resolved defaults + overrides
    SurfacePatch patch;
    bool spectral_allowed = true;  // sphere: geometry only (polar singularity)

    std::function<Mat2(double, double)> oracle_gS;
    std::function<double(double, double)> oracle_H;
    std::function<double(double, double)> oracle_K;

    bool has_spectral_oracle = false;
};

struct ParamSpec {
    std::string name;
    double default_value;
    std::string description;
};

struct CatalogInfo {
    std::string name;
    std::string description;
    std::vector<ParamSpec> params;
    bool spectral_allowed;
};

const std::vector<CatalogInfo>& catalog_list();

/// Throws ConfigError for unknown names, unknown parameter keys or
/// out-of-validity values (e.g. torus r >= R).
CatalogEntry builtin(const std::string& name, const std::map<std::string, double>& params);

/// k smallest continuum eigenvalues of the effective surface operator;
/// available for plane and cylinder only (separable spectra).
std::vector<double> spectral_oracle(const CatalogEntry& entry, int k);

/// k smallest exact eigenvalues of the assembled discrete operator; the
/// plane and cylinder metrics are constant, so the flux-form stencil
/// separates exactly.
std::vector<double> discrete_spectral_oracle(const CatalogEntry& entry, const Grid2& grid,
                                             int k);

/// Most restrictive tube half-width over an ns1 x ns2 interior sample:
/// min over nodes of 1 / max |principal curvature|.
double admissible_epsilon(const SurfacePatch& patch, int ns1, int ns2);

/// The same bound via the smallest-magnitude root of f(q) = 0 per node
/// (an independent route used for cross-checking).
double admissible_epsilon_via_roots(const SurfacePatch& patch, int ns1, int ns2);

} // namespace sqm
