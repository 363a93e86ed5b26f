#include "sqm/job.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "sqm/assemble.hpp"
#include "sqm/errors.hpp"
#include "sqm/geometry.hpp"
#include "sqm/lanczos.hpp"
#include "sqm/transform.hpp"

namespace sqm {

using nlohmann::json;

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw Error("cannot write " + tmp);
        os << content;
    }
    std::filesystem::rename(tmp, path);
}

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ConfigError("unknown key '" + key + "' in " + where);
    }
}

double get_number(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
    return j[key].get<double>();
}

int get_int(const json& j, const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer())
        throw ConfigError(std::string("'") + key + "' must be an integer");
    return j[key].get<int>();
}

std::map<std::string, double> get_params(const json& j, const std::string& where) {
    std::map<std::string, double> out;
    if (!j.is_object()) throw ConfigError(where + ".params must be an object");
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number()) throw ConfigError("parameter '" + key + "' must be a number");
        out[key] = value.get<double>();
    }
    return out;
}

class Timer {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json config_echo(const JobConfig& cfg) {
    json surface;
    if (cfg.surface.is_preset) {
        surface = {{"preset", cfg.surface.preset}, {"params", cfg.surface.params}};
    } else {
        surface = {{"custom",
                    {{"x", cfg.surface.x},
                     {"y", cfg.surface.y},
                     {"z", cfg.surface.z},
                     {"L1", cfg.surface.L1},
                     {"L2", cfg.surface.L2},
                     {"periodic1", cfg.surface.periodic1},
                     {"periodic2", cfg.surface.periodic2},
                     {"params", cfg.surface.params}}}};
    }
    return {{"surface", surface},
            {"grid", {{"n1", cfg.n1}, {"n2", cfg.n2}}},
            {"tube",
             {{"epsilon", cfg.epsilon}, {"epsilons", cfg.epsilons}, {"nq", cfg.nq},
              {"layer", cfg.layer}}},
            {"eigen",
             {{"k", cfg.k}, {"tol", cfg.tol}, {"seed", cfg.seed}, {"max_iter", cfg.max_iter},
              {"exclude_trivial_mode", cfg.exclude_trivial_mode}}},
            {"output_dir", cfg.output_dir}};
}

void write_report(const std::string& path, const std::string& command, const JobConfig& cfg,
                  double elapsed_ms, json results) {
    json rep = {{"command", command},
                {"version", kVersion},
                {"config", config_echo(cfg)},
                {"timing_ms", elapsed_ms},
                {"results", std::move(results)}};
    write_file_atomic(path, rep.dump(2) + "\n");
}

std::string out_path(const std::string& dir, const std::string& file) {
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / file).string();
}

struct SolveOutcome {
    Spectrum spec;
    double symmetrize_defect = 0;
    double flat_defect = 0;  // 3D only
};

SolveOutcome solve_2d(const JobConfig& cfg, const SurfacePatch& patch,
                      SparseOperator* dump = nullptr) {
    const Grid2 grid = make_grid2(patch, cfg.n1, cfg.n2);
    const Hamiltonian2D h = assemble_h2d(patch, grid);
    Symmetrized sym = symmetrize(h.op);
    if (dump) *dump = sym.op;
    SolveOutcome out;
    out.symmetrize_defect = sym.defect;
    out.spec = smallest_eigenpairs(sym.op, cfg.k, cfg.tol, cfg.seed, cfg.max_iter,
                                   cfg.exclude_trivial_mode);
    return out;
}

SolveOutcome solve_3d(const JobConfig& cfg, const SurfacePatch& patch, double epsilon,
                      SparseOperator* dump = nullptr) {
    const Grid3 grid = make_grid3(patch, cfg.n1, cfg.n2, cfg.nq, epsilon);
    const Hamiltonian3D h = assemble_h3d(patch, grid);
    const SelfAdjointized L = selfadjointize(h);
    Symmetrized sym = symmetrize(L.op);
    if (dump) *dump = sym.op;
    SolveOutcome out;
    out.symmetrize_defect = sym.defect;
    out.flat_defect = L.flat_defect;
    out.spec = smallest_eigenpairs(sym.op, cfg.k, cfg.tol, cfg.seed, cfg.max_iter, false);
    return out;
}

json spectrum_json(const SolveOutcome& o) {
    return {{"eigenvalues", o.spec.eigenvalues},
            {"residuals", o.spec.residuals},
            {"iterations", o.spec.iterations},
            {"converged", o.spec.converged},
            {"op_norm_est", o.spec.op_norm_est},
            {"seed", o.spec.seed},
            {"symmetrize_defect", o.symmetrize_defect}};
}

void write_spectrum_csv(const std::string& path, const Spectrum& spec) {
    std::ostringstream os;
    os << "index,eigenvalue,residual\n";
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i)
        os << i << "," << fmt17(spec.eigenvalues[i]) << "," << fmt17(spec.residuals[i])
           << "\n";
    write_file_atomic(path, os.str());
}

void dump_matrix(const std::string& dir, const std::string& stem, const SparseOperator& op,
                 const JobConfig& cfg, const std::string& ordering) {
    std::ostringstream os;
    write_matrix_market(os, op);
    write_file_atomic(out_path(dir, stem + ".mtx"), os.str());
    json meta = {{"version", kVersion},
                 {"config", config_echo(cfg)},
                 {"ordering", ordering},
                 {"dimension", op.n},
                 {"format", "MatrixMarket coordinate real symmetric, lower triangle"}};
    write_file_atomic(out_path(dir, stem + ".json"), meta.dump(2) + "\n");
}

} // namespace

double transverse_ground_energy(double epsilon, int nq) {
    const double hq = 2.0 * epsilon / (nq + 1);
    const double s = std::sin(std::numbers::pi * hq / (4.0 * epsilon));
    return 4.0 / (hq * hq) * s * s;
}

JobConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be an object");
    check_keys(j, {"surface", "grid", "tube", "eigen", "output_dir"}, "config");

    JobConfig cfg;

    if (!j.contains("surface")) throw ConfigError("config requires a 'surface' section");
    const json& s = j["surface"];
    check_keys(s, {"preset", "params", "custom"}, "surface");
    if (s.contains("preset") == s.contains("custom"))
        throw ConfigError("surface requires exactly one of 'preset' or 'custom'");
    if (s.contains("preset")) {
        cfg.surface.is_preset = true;
        cfg.surface.preset = s["preset"].get<std::string>();
        if (s.contains("params")) cfg.surface.params = get_params(s["params"], "surface");
    } else {
        const json& c = s["custom"];
        check_keys(c, {"x", "y", "z", "L1", "L2", "periodic1", "periodic2", "params"},
                   "surface.custom");
        cfg.surface.is_preset = false;
        for (const char* key : {"x", "y", "z"})
            if (!c.contains(key) || !c[key].is_string())
                throw ConfigError(std::string("surface.custom requires string '") + key + "'");
        cfg.surface.x = c["x"].get<std::string>();
        cfg.surface.y = c["y"].get<std::string>();
        cfg.surface.z = c["z"].get<std::string>();
        cfg.surface.L1 = get_number(c, "L1", 0.0);
        cfg.surface.L2 = get_number(c, "L2", 0.0);
        if (!(cfg.surface.L1 > 0) || !(cfg.surface.L2 > 0))
            throw ConfigError("surface.custom requires positive L1 and L2");
        cfg.surface.periodic1 = c.value("periodic1", false);
        cfg.surface.periodic2 = c.value("periodic2", false);
        if (c.contains("params")) cfg.surface.params = get_params(c["params"], "surface.custom");
    }

    if (j.contains("grid")) {
        check_keys(j["grid"], {"n1", "n2"}, "grid");
        cfg.n1 = get_int(j["grid"], "n1", cfg.n1);
        cfg.n2 = get_int(j["grid"], "n2", cfg.n2);
    }
    if (cfg.n1 < 2 || cfg.n2 < 2) throw ConfigError("grid.n1 and grid.n2 must be >= 2");

    if (j.contains("tube")) {
        const json& t = j["tube"];
        check_keys(t, {"epsilon", "epsilons", "nq", "layer"}, "tube");
        cfg.epsilon = get_number(t, "epsilon", cfg.epsilon);
        cfg.nq = get_int(t, "nq", cfg.nq);
        cfg.layer = get_int(t, "layer", cfg.layer);
        if (t.contains("epsilons")) {
            if (!t["epsilons"].is_array()) throw ConfigError("tube.epsilons must be an array");
            for (const auto& e : t["epsilons"]) {
                if (!e.is_number() || !(e.get<double>() > 0))
                    throw ConfigError("tube.epsilons entries must be positive numbers");
                cfg.epsilons.push_back(e.get<double>());
            }
        }
    }
    if (!(cfg.epsilon > 0)) throw ConfigError("tube.epsilon must be positive");
    if (cfg.nq < 3 || cfg.nq % 2 == 0) throw ConfigError("tube.nq must be odd and >= 3");

    if (j.contains("eigen")) {
        const json& e = j["eigen"];
        check_keys(e, {"k", "tol", "seed", "max_iter", "exclude_trivial_mode"}, "eigen");
        cfg.k = get_int(e, "k", cfg.k);
        cfg.tol = get_number(e, "tol", cfg.tol);
        if (e.contains("seed")) cfg.seed = e["seed"].get<std::uint64_t>();
        cfg.max_iter = get_int(e, "max_iter", cfg.max_iter);
        cfg.exclude_trivial_mode = e.value("exclude_trivial_mode", false);
    }
    if (cfg.k < 1) throw ConfigError("eigen.k must be >= 1");
    if (!(cfg.tol > 0)) throw ConfigError("eigen.tol must be positive");
    if (cfg.max_iter < 1) throw ConfigError("eigen.max_iter must be >= 1");

    if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();
    return cfg;
}

SurfacePatch resolve_surface(const JobConfig& cfg, bool spectral_run) {
    if (cfg.surface.is_preset) {
        const CatalogEntry entry = builtin(cfg.surface.preset, cfg.surface.params);
        if (spectral_run && !entry.spectral_allowed)
            throw ConfigError("surface '" + entry.name +
                              "' is geometry-only; spectral runs are refused");
        return entry.patch;
    }
    return make_patch("custom", cfg.surface.x, cfg.surface.y, cfg.surface.z, cfg.surface.L1,
                      cfg.surface.L2,
                      cfg.surface.periodic1 ? Boundary::Periodic : Boundary::Dirichlet,
                      cfg.surface.periodic2 ? Boundary::Periodic : Boundary::Dirichlet,
                      cfg.surface.params);
}

int cmd_geometry(const JobConfig& cfg, const std::string& out_dir) {
    Timer timer;
    const SurfacePatch patch = resolve_surface(cfg, false);
    const Grid2 grid = make_grid2(patch, cfg.n1, cfg.n2);

    double H_min = 1e300, H_max = -1e300, K_min = 1e300, K_max = -1e300;
    double pot_min = 1e300, pot_max = -1e300;
    double adm = 1e300;

    std::ostringstream csv;
    csv << "s1,s2,H,K,geo_pot,sqrt_detg\n";
    for (int j = 0; j < grid.n2; ++j) {
        for (int i = 0; i < grid.n1; ++i) {
            const double s1 = grid.s1(i), s2 = grid.s2(j);
            const PointGeometry pg = point_geometry(patch, s1, s2);
            csv << fmt17(s1) << "," << fmt17(s2) << "," << fmt17(pg.H) << "," << fmt17(pg.K)
                << "," << fmt17(pg.geo_pot) << "," << fmt17(pg.sqrt_detgS) << "\n";
            H_min = std::min(H_min, pg.H);
            H_max = std::max(H_max, pg.H);
            K_min = std::min(K_min, pg.K);
            K_max = std::max(K_max, pg.K);
            pot_min = std::min(pot_min, pg.geo_pot);
            pot_max = std::max(pot_max, pg.geo_pot);
            adm = std::min(adm, admissible_q(pg));
        }
    }
    write_file_atomic(out_path(out_dir, "geometry.csv"), csv.str());

    json results = {{"H_min", H_min},       {"H_max", H_max},
                    {"K_min", K_min},       {"K_max", K_max},
                    {"geo_pot_min", pot_min}, {"geo_pot_max", pot_max},
                    {"max_admissible_epsilon", adm}};
    write_report(out_path(out_dir, "geometry.json"), "geometry", cfg, timer.elapsed_ms(),
                 results);
    return kExitOk;
}

int cmd_spectrum2d(const JobConfig& cfg, const std::string& out_dir, bool want_dump) {
    Timer timer;
    const SurfacePatch patch = resolve_surface(cfg, true);
    SparseOperator sym_op;
    const SolveOutcome o = solve_2d(cfg, patch, want_dump ? &sym_op : nullptr);
    if (want_dump)
        dump_matrix(out_dir, "matrix2d", sym_op, cfg, "row(i,j) = j*n1 + i, j-major");
    write_spectrum_csv(out_path(out_dir, "spectrum2d.csv"), o.spec);
    write_report(out_path(out_dir, "spectrum2d.json"), "spectrum2d", cfg, timer.elapsed_ms(),
                 spectrum_json(o));
    if (!o.spec.converged) throw SolverError("spectrum2d failed to converge");
    return kExitOk;
}

int cmd_spectrum3d(const JobConfig& cfg, const std::string& out_dir, bool want_dump) {
    Timer timer;
    const SurfacePatch patch = resolve_surface(cfg, true);
    SparseOperator sym_op;
    const SolveOutcome o = solve_3d(cfg, patch, cfg.epsilon, want_dump ? &sym_op : nullptr);
    if (want_dump)
        dump_matrix(out_dir, "matrix3d", sym_op, cfg,
                    "row(i,j,k) = k*n1*n2 + j*n1 + i, q-major");
    write_spectrum_csv(out_path(out_dir, "spectrum3d.csv"), o.spec);
    json results = spectrum_json(o);
    results["flat_symmetry_defect"] = o.flat_defect;
    results["transverse_ground_energy"] = transverse_ground_energy(cfg.epsilon, cfg.nq);
    write_report(out_path(out_dir, "spectrum3d.json"), "spectrum3d", cfg, timer.elapsed_ms(),
                 results);
    if (!o.spec.converged) throw SolverError("spectrum3d failed to converge");
    return kExitOk;
}

int cmd_squeeze(const JobConfig& cfg, const std::string& out_dir) {
    Timer timer;
    const SurfacePatch patch = resolve_surface(cfg, true);
    std::vector<double> epsilons = cfg.epsilons;
    if (epsilons.empty()) epsilons = {cfg.epsilon};

    const SolveOutcome o2 = solve_2d(cfg, patch);
    if (!o2.spec.converged) throw SolverError("squeeze: 2D reference failed to converge");

    std::ostringstream csv;
    csv << "epsilon,i,E3d,E3d_minus_transverse,E2d,gap\n";
    json per_eps = json::array();
    int failures = 0;

    for (const double eps : epsilons) {
        json record = {{"epsilon", eps}};
        try {
            const SolveOutcome o3 = solve_3d(cfg, patch, eps);
            const double transverse = transverse_ground_energy(eps, cfg.nq);
            record["transverse_ground_energy"] = transverse;
            record["spectrum"] = spectrum_json(o3);
            if (!o3.spec.converged) {
                record["error"] = "solver did not converge";
                ++failures;
            } else {
                for (int i = 0; i < cfg.k; ++i) {
                    const double e3 = o3.spec.eigenvalues[i];
                    const double e2 = o2.spec.eigenvalues[i];
                    const double shifted = e3 - transverse;
                    csv << fmt17(eps) << "," << i << "," << fmt17(e3) << ","
                        << fmt17(shifted) << "," << fmt17(e2) << ","
                        << fmt17(std::abs(shifted - e2)) << "\n";
                }
            }
        } catch (const Error& e) {
            record["error"] = e.what();
            ++failures;
        }
        per_eps.push_back(std::move(record));
    }

    write_file_atomic(out_path(out_dir, "squeeze.csv"), csv.str());
    json results = {{"per_epsilon", per_eps},
                    {"reference_2d", spectrum_json(o2)},
                    {"failures", failures}};
    write_report(out_path(out_dir, "squeeze.json"), "squeeze", cfg, timer.elapsed_ms(),
                 results);
    if (failures == int(epsilons.size()))
        throw SolverError("squeeze: every epsilon failed");
    return kExitOk;
}

int cmd_surfaces(std::ostream& os) {
    json out = json::array();
    for (const auto& info : catalog_list()) {
        json params = json::array();
        for (const auto& p : info.params)
            params.push_back({{"name", p.name},
                              {"default", p.default_value},
                              {"description", p.description}});
        out.push_back({{"name", info.name},
                       {"description", info.description},
                       {"spectral", info.spectral_allowed},
                       {"params", params}});
    }
    os << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const JobConfig& cfg, const std::string& out_dir) {
    Timer timer;
    const SurfacePatch patch = resolve_surface(cfg, false);
    json checks = json::array();
    bool all_pass = true;

    auto record = [&](const std::string& name, bool pass, double measured, double threshold,
                      const std::string& note) {
        checks.push_back({{"name", name},
                          {"pass", pass},
                          {"measured", measured},
                          {"threshold", threshold},
                          {"note", note}});
        all_pass = all_pass && pass;
    };

    // --- determinant identity at seeded random tube points -------------------
    {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> u01(0.05, 0.95);
        std::uniform_real_distribution<double> uq(-0.3, 0.3);
        double worst = 0.0;
        int accepted = 0;
        while (accepted < 200) {
            const double s1 = u01(rng) * patch.L1;
            const double s2 = u01(rng) * patch.L2;
            const double q = uq(rng);
            const PointGeometry pg = point_geometry(patch, s1, s2);
            const double tr = pg.gamma.trace(), dt = pg.gamma.det();
            if (1.0 + q * tr + q * q * dt <= 0.2) continue;
            worst = std::max(worst, det_identity_residual(patch, s1, s2, q));
            ++accepted;
        }
        record("det-identity", worst <= 1e-10, worst, 1e-10,
               "max relative |det gSq - f^2 det gS| over 200 random (s, q)");
    }

    const bool curved = admissible_epsilon(patch, 12, 12) < 1e8;

    // --- normal momentum antisymmetry, flat vs tube weight -------------------
    {
        const Grid3 grid = make_grid3(patch, cfg.n1, cfg.n2, cfg.nq, cfg.epsilon);
        const Hamiltonian3D h3 = assemble_h3d(patch, grid);
        const SparseOperator dq = normal_momentum(grid);
        const WeightedSpace flat = make_flat_space(h3);
        const WeightedSpace tube = make_tube_space(h3);
        const double flat_defect = weighted_antisymmetry_defect(dq, flat.w);
        const double tube_defect = weighted_antisymmetry_defect(dq, tube.w);
        record("normal-momentum-flat-antisymmetry", flat_defect <= 1e-12, flat_defect, 1e-12,
               "max |W Dq + Dq^T W|, flat-in-q weight");
        if (curved)
            record("normal-momentum-tube-defect-positive", tube_defect >= 1e-8, tube_defect,
                   1e-8, "tube weight must break Dq antisymmetry on curved surfaces");
        else
            record("normal-momentum-tube-defect-flat-surface", tube_defect <= 1e-12,
                   tube_defect, 1e-12, "f == 1 keeps the tube weight flat");

        // --- kernel projection ------------------------------------------------
        const SparseOperator proj = kernel_projection(grid);
        std::mt19937_64 rng(cfg.seed + 1);
        std::uniform_real_distribution<double> uni(-1.0, 1.0);
        std::vector<double> u(proj.n);
        for (double& x : u) x = uni(rng);
        const std::vector<double> pu = proj.apply(u);
        const std::vector<double> ppu = proj.apply(pu);
        double idem = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i)
            idem = std::max(idem, std::abs(ppu[i] - pu[i]));
        record("projection-idempotent", idem <= 1e-14, idem, 1e-14,
               "max |P(Pu) - Pu| on a random vector");

        const double proj_flat = weighted_symmetry_defect(proj, flat.w);
        record("projection-flat-self-adjoint", proj_flat <= 1e-12, proj_flat, 1e-12,
               "max |W P - P^T W|, flat-in-q weight");
        const double proj_tube = weighted_symmetry_defect(proj, tube.w);
        if (curved)
            record("projection-tube-defect-positive", proj_tube >= 1e-10, proj_tube, 1e-10,
                   "tube weight must break projection self-adjointness");
        else
            record("projection-tube-defect-flat-surface", proj_tube <= 1e-12, proj_tube,
                   1e-12, "f == 1 keeps the tube weight flat");
    }

    // --- operator identity: restriction vs direct 2D, two resolutions --------
    {
        auto residual_at = [&](int n1, int n2, int nq) {
            const Grid2 g2 = make_grid2(patch, n1, n2);
            const Grid3 g3 = make_grid3(patch, n1, n2, nq, cfg.epsilon);
            const Hamiltonian2D h2 = assemble_h2d(patch, g2);
            const Hamiltonian3D h3 = assemble_h3d(patch, g3);
            const SelfAdjointized L = selfadjointize(h3);

            std::vector<double> test(g2.size());
            for (int j = 0; j < g2.n2; ++j)
                for (int i = 0; i < g2.n1; ++i)
                    test[g2.row(i, j)] =
                        std::cos(2.0 * std::numbers::pi * g2.s1(i) / patch.L1) *
                        std::sin(4.0 * std::numbers::pi * g2.s2(j) / patch.L2);

            const std::vector<double> restricted =
                restrict_to_surface(L.op, g3, test, cfg.layer);
            const std::vector<double> direct = h2.op.apply(test);
            double sup = 0.0;
            for (std::size_t m = 0; m < test.size(); ++m)
                sup = std::max(sup, std::abs(restricted[m] - direct[m]));
            return sup;
        };
        const double coarse = residual_at(cfg.n1, cfg.n2, cfg.nq);
        const double fine = residual_at(2 * cfg.n1, 2 * cfg.n2, 2 * cfg.nq - 1);
        if (coarse <= 1e-12 && fine <= 1e-12) {
            record("operator-identity-exact", true, std::max(coarse, fine), 1e-12,
                   "restriction equals the 2D operator to roundoff (flat tube)");
        } else {
            const double ratio = coarse / fine;
            record("operator-identity-convergence", ratio >= 3.0 && ratio <= 5.0, ratio, 4.0,
                   "sup-norm residual ratio under grid doubling, expect ~4");
        }
    }

    json results = {{"checks", checks}, {"pass", all_pass}};
    write_report(out_path(out_dir, "verify.json"), "verify", cfg, timer.elapsed_ms(), results);
    if (!all_pass) {
        for (const auto& c : checks)
            if (!c["pass"].get<bool>())
                std::fprintf(stderr, "verify FAILED: %s (measured %.17g)\n",
                             c["name"].get<std::string>().c_str(),
                             c["measured"].get<double>());
        return kExitVerify;
    }
    return kExitOk;
}

} // namespace sqm
