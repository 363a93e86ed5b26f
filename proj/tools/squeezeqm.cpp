#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sqm/errors.hpp"
#include "sqm/job.hpp"

namespace {

int run_command(const std::string& command, const std::string& config_path,
                const std::string& out_override, bool dump) {
    using namespace sqm;

    if (command == "surfaces") return cmd_surfaces(std::cout);

    const JobConfig cfg = load_config(config_path);
    const std::string out = out_override.empty() ? cfg.output_dir : out_override;

    if (command == "geometry") return cmd_geometry(cfg, out);
    if (command == "spectrum2d") return cmd_spectrum2d(cfg, out, dump);
    if (command == "spectrum3d") return cmd_spectrum3d(cfg, out, dump);
    if (command == "squeeze") return cmd_squeeze(cfg, out);
    if (command == "verify") return cmd_verify(cfg, out);
    throw ConfigError("unknown command '" + command + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(sqm::kVersion) +
                 " - submanifold Schrodinger operators on tubular neighborhoods"};

    std::string command;
    std::string config_path;
    std::string out_dir;
    bool dump = false;

    app.add_option("command", command,
                   "one of: geometry | spectrum2d | spectrum3d | squeeze | verify | surfaces")
        ->required();
    app.add_option("--config", config_path, "JSON job configuration");
    app.add_option("--out", out_dir, "output directory (overrides config output_dir)");
    app.add_flag("--dump-matrix", dump, "also write the symmetrized operator (MatrixMarket)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (command != "surfaces" && config_path.empty())
            throw sqm::ConfigError("--config is required for this command");
        return run_command(command, config_path, out_dir, dump);
    } catch (const sqm::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return sqm::kExitConfig;
    } catch (const sqm::ParseError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return sqm::kExitConfig;
    } catch (const sqm::SymbolError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return sqm::kExitConfig;
    } catch (const sqm::SolverError& e) {
        std::fprintf(stderr, "solver error: %s\n", e.what());
        return sqm::kExitSolver;
    } catch (const sqm::GeometryError& e) {
        std::fprintf(stderr, "geometry error: %s\n", e.what());
        return sqm::kExitGeometry;
    } catch (const sqm::AssembleError& e) {
        std::fprintf(stderr, "geometry error: %s\n", e.what());
        return sqm::kExitGeometry;
    } catch (const sqm::EvalError& e) {
        std::fprintf(stderr, "geometry error: %s\n", e.what());
        return sqm::kExitGeometry;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
