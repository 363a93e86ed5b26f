#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sqm/catalog.hpp"
#include "sqm/surface.hpp"

namespace sqm {

inline constexpr const char* kVersion = "squeezeqm 0.1.0";

// Exit codes, stable and documented:
//   0 success, 2 config/schema violation, 3 geometry/tube-validity error,
//   4 solver non-convergence, 5 verification check failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitGeometry = 3;
inline constexpr int kExitSolver = 4;
inline constexpr int kExitVerify = 5;

struct SurfaceConfig {
    bool is_preset = true;
    std::string preset;
    std::map<std::string, double> params;
    // custom surfaces:
    std::string x, y, z;
    double L1 = 1.0, L2 = 1.0;
    bool periodic1 = false, periodic2 = false;
};

struct JobConfig {
    SurfaceConfig surface;
    int n1 = 32, n2 = 32;
    double epsilon = 0.1;
    std::vector<double> epsilons;  // squeeze sweep; falls back to {epsilon}
    int nq = 9;
    int layer = -1;  // restriction layer override (q = q0 variant); -1 = central
    int k = 6;
    double tol = 1e-8;
    std::uint64_t seed = 42;
    int max_iter = 800;
    bool exclude_trivial_mode = false;
    std::string output_dir = ".";
};

/// Parse + validate a JSON job file (strict keys, see docs/config.schema.json).
JobConfig load_config(const std::string& path);

/// The configured surface; for presets the catalog entry is consulted so
/// spectral runs on geometry-only surfaces are refused.
SurfacePatch resolve_surface(const JobConfig& cfg, bool spectral_run);

int cmd_geometry(const JobConfig& cfg, const std::string& out_dir);
int cmd_spectrum2d(const JobConfig& cfg, const std::string& out_dir, bool dump_matrix);
int cmd_spectrum3d(const JobConfig& cfg, const std::string& out_dir, bool dump_matrix);
int cmd_squeeze(const JobConfig& cfg, const std::string& out_dir);
int cmd_verify(const JobConfig& cfg, const std::string& out_dir);
int cmd_surfaces(std::ostream& os);

/// Exact ground energy of the discrete transverse Dirichlet chain on
/// (-eps, eps) with nq interior layers; converges to pi^2/(4 eps^2) as the
/// layer count grows and is the reference subtracted by `squeeze`.
double transverse_ground_energy(double epsilon, int nq);

} // namespace sqm
