#include "sqm/grid.hpp"

#include "sqm/errors.hpp"

namespace sqm {

Grid2 make_grid2(const SurfacePatch& patch, int n1, int n2) {
    if (n1 < 2 || n2 < 2) throw ConfigError("grid needs at least 2 points per direction");
    Grid2 g;
    g.n1 = n1;
    g.n2 = n2;
    g.L1 = patch.L1;
    g.L2 = patch.L2;
    g.bc1 = patch.bc1;
    g.bc2 = patch.bc2;
    g.h1 = patch.bc1 == Boundary::Periodic ? patch.L1 / n1 : patch.L1 / (n1 + 1);
    g.h2 = patch.bc2 == Boundary::Periodic ? patch.L2 / n2 : patch.L2 / (n2 + 1);
    return g;
}

Grid3 make_grid3(const SurfacePatch& patch, int n1, int n2, int nq, double epsilon) {
    if (nq < 3) throw ConfigError("nq must be at least 3");
    if (nq % 2 == 0) throw ConfigError("nq must be odd so a layer sits at q = 0");
    if (!(epsilon > 0)) throw ConfigError("epsilon must be positive");
    Grid3 g;
    g.base = make_grid2(patch, n1, n2);
    g.nq = nq;
    g.epsilon = epsilon;
    g.hq = 2.0 * epsilon / (nq + 1);
    return g;
}

} // namespace sqm
