#include "sqm/assemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sqm/errors.hpp"

namespace sqm {

namespace {

// Extended-index parameter value; periodic indices wrap so duplicated ring
// samples are bitwise identical to their interior counterparts.
int wrap_index(int i, int n, Boundary bc) {
    if (bc == Boundary::Periodic) return ((i % n) + n) % n;
    return i;  // Dirichlet: s(-1) = 0 and s(n) = L are genuine wall samples
}

bool neighbor_exists(int i, int n, Boundary bc) {
    if (bc == Boundary::Periodic) return true;
    return i >= 0 && i < n;
}

int neighbor_column(int i, int n, Boundary bc) {
    if (bc == Boundary::Periodic) return ((i % n) + n) % n;
    return i;
}

} // namespace

GeometryCache build_cache(const SurfacePatch& patch, const Grid2& grid) {
    GeometryCache c;
    c.grid = grid;
    c.stride = grid.n1 + 2;
    const std::size_t total = std::size_t(grid.n1 + 2) * (grid.n2 + 2);
    c.c11.resize(total);
    c.c12.resize(total);
    c.c22.resize(total);
    c.w.resize(total);
    c.pot.resize(total);
    c.gamma_tr.resize(total);
    c.gamma_det.resize(total);
    c.adm_q.resize(total);

    for (int j = -1; j <= grid.n2; ++j) {
        for (int i = -1; i <= grid.n1; ++i) {
            const int iw = wrap_index(i, grid.n1, grid.bc1);
            const int jw = wrap_index(j, grid.n2, grid.bc2);
            const PointGeometry pg = point_geometry(patch, grid.s1(iw), grid.s2(jw));
            const std::size_t e = c.eidx(i, j);
            c.c11[e] = pg.sqrt_detgS * pg.gS_inv.m[0][0];
            c.c12[e] = pg.sqrt_detgS * pg.gS_inv.m[0][1];
            c.c22[e] = pg.sqrt_detgS * pg.gS_inv.m[1][1];
            c.w[e] = pg.sqrt_detgS;
            c.pot[e] = pg.geo_pot;
            c.gamma_tr[e] = pg.gamma.trace();
            c.gamma_det[e] = pg.gamma.det();
            c.adm_q[e] = admissible_q(pg);
        }
    }
    return c;
}

namespace {

// Shared flux-form assembly of -(1/w) d_a (c^{ab} d_b u) over one 2D layer.
// `col_of` maps valid (i, j) to a matrix column; ghost neighbors vanish.
template <typename C11F, typename C12F, typename C22F, typename ColOf>
void add_tangential_stencil(SparseBuilder& b, const Grid2& g, int i, int j, std::size_t row,
                            double inv_w, C11F c11, C12F c12, C22F c22, ColOf col_of) {
    const double ih1h1 = 1.0 / (g.h1 * g.h1);
    const double ih2h2 = 1.0 / (g.h2 * g.h2);

    // direction-1 flux with arithmetic half-point coefficients
    const double cR = 0.5 * (c11(i, j) + c11(i + 1, j));
    const double cL = 0.5 * (c11(i - 1, j) + c11(i, j));
    b.add(row, row, inv_w * (cR + cL) * ih1h1);
    if (neighbor_exists(i + 1, g.n1, g.bc1))
        b.add(row, col_of(neighbor_column(i + 1, g.n1, g.bc1), j), -inv_w * cR * ih1h1);
    if (neighbor_exists(i - 1, g.n1, g.bc1))
        b.add(row, col_of(neighbor_column(i - 1, g.n1, g.bc1), j), -inv_w * cL * ih1h1);

    // direction-2 flux
    const double cU = 0.5 * (c22(i, j) + c22(i, j + 1));
    const double cD = 0.5 * (c22(i, j - 1) + c22(i, j));
    b.add(row, row, inv_w * (cU + cD) * ih2h2);
    if (neighbor_exists(j + 1, g.n2, g.bc2))
        b.add(row, col_of(i, neighbor_column(j + 1, g.n2, g.bc2)), -inv_w * cU * ih2h2);
    if (neighbor_exists(j - 1, g.n2, g.bc2))
        b.add(row, col_of(i, neighbor_column(j - 1, g.n2, g.bc2)), -inv_w * cD * ih2h2);

    // centered cross terms; each diagonal neighbor collects two coefficients
    const double q = 1.0 / (4.0 * g.h1 * g.h2);
    auto add_diag = [&](int di, int dj, double coef) {
        if (!neighbor_exists(i + di, g.n1, g.bc1)) return;
        if (!neighbor_exists(j + dj, g.n2, g.bc2)) return;
        if (coef == 0.0) return;
        b.add(row,
              col_of(neighbor_column(i + di, g.n1, g.bc1), neighbor_column(j + dj, g.n2, g.bc2)),
              -inv_w * coef);
    };
    add_diag(+1, +1, q * (c12(i + 1, j) + c12(i, j + 1)));
    add_diag(+1, -1, -q * (c12(i + 1, j) + c12(i, j - 1)));
    add_diag(-1, +1, -q * (c12(i - 1, j) + c12(i, j + 1)));
    add_diag(-1, -1, q * (c12(i - 1, j) + c12(i, j - 1)));
}

} // namespace

Hamiltonian2D assemble_h2d(const SurfacePatch& patch, const Grid2& grid,
                           const AssembleOptions& opt) {
    auto cache = std::make_shared<GeometryCache>(build_cache(patch, grid));
    const GeometryCache& c = *cache;

    SparseBuilder b(grid.size());
    std::vector<double> weight(grid.size());

    for (int j = 0; j < grid.n2; ++j) {
        for (int i = 0; i < grid.n1; ++i) {
            const std::size_t row = grid.row(i, j);
            const double w0 = c.w[c.eidx(i, j)];
            weight[row] = w0;
            const double inv_w = 1.0 / w0;

            add_tangential_stencil(
                b, grid, i, j, row, inv_w,
                [&](int a, int bb) { return c.c11[c.eidx(a, bb)]; },
                [&](int a, int bb) { return c.c12[c.eidx(a, bb)]; },
                [&](int a, int bb) { return c.c22[c.eidx(a, bb)]; },
                [&](int a, int bb) { return grid.row(a, bb); });

            if (opt.include_potential) b.add(row, row, -c.pot[c.eidx(i, j)]);
        }
    }

    Hamiltonian2D h;
    h.op = b.build(std::move(weight));
    h.grid = grid;
    h.cache = cache;
    h.surface = patch.name;
    return h;
}

Hamiltonian3D assemble_h3d(const SurfacePatch& patch, const Grid3& grid,
                           const AssembleOptions& opt) {
    auto cache = std::make_shared<TubeCache>();
    TubeCache& tc = *cache;
    tc.grid = grid;
    tc.base = build_cache(patch, grid.base);
    const GeometryCache& c2 = tc.base;
    const Grid2& g2 = grid.base;

    // Tube validity over the whole extended sample, reported with the most
    // restrictive node.
    double min_adm = std::numeric_limits<double>::infinity();
    int bad_i = 0, bad_j = 0;
    for (int j = -1; j <= g2.n2; ++j)
        for (int i = -1; i <= g2.n1; ++i)
            if (c2.adm_q[c2.eidx(i, j)] < min_adm) {
                min_adm = c2.adm_q[c2.eidx(i, j)];
                bad_i = i;
                bad_j = j;
            }
    if (!(grid.epsilon < min_adm) && !opt.flat_tube)
        throw AssembleError("epsilon = " + std::to_string(grid.epsilon) +
                            " violates tube validity near node (" + std::to_string(bad_i) +
                            ", " + std::to_string(bad_j) +
                            "); admissible epsilon < " + std::to_string(min_adm));

    const std::size_t per_layer = std::size_t(g2.n1 + 2) * (g2.n2 + 2);
    const std::size_t total = per_layer * (grid.nq + 2);
    tc.C11.resize(total);
    tc.C12.resize(total);
    tc.C22.resize(total);
    tc.Cq.resize(total);
    tc.f.resize(total);

    for (int j = -1; j <= g2.n2; ++j) {
        for (int i = -1; i <= g2.n1; ++i) {
            const int iw = wrap_index(i, g2.n1, g2.bc1);
            const int jw = wrap_index(j, g2.n2, g2.bc2);
            const PointGeometry pg = point_geometry(patch, g2.s1(iw), g2.s2(jw));
            for (int k = -1; k <= grid.nq; ++k) {
                const std::size_t e = tc.eidx(i, j, k);
                if (opt.flat_tube) {
                    tc.f[e] = 1.0;
                    tc.C11[e] = pg.sqrt_detgS * pg.gS_inv.m[0][0];
                    tc.C12[e] = pg.sqrt_detgS * pg.gS_inv.m[0][1];
                    tc.C22[e] = pg.sqrt_detgS * pg.gS_inv.m[1][1];
                    tc.Cq[e] = pg.sqrt_detgS;
                } else {
                    const TubeGeometry tg = tube_metric(pg, grid.q(k));
                    const Mat2 gSq_inv = inverse(tg.gSq);
                    const double dens = pg.sqrt_detgS * tg.f;
                    tc.f[e] = tg.f;
                    tc.C11[e] = dens * gSq_inv.m[0][0];
                    tc.C12[e] = dens * gSq_inv.m[0][1];
                    tc.C22[e] = dens * gSq_inv.m[1][1];
                    tc.Cq[e] = dens;
                }
            }
        }
    }

    SparseBuilder b(grid.size());
    std::vector<double> weight(grid.size());
    std::vector<double> f_nodes(grid.size());
    const double ihqhq = 1.0 / (grid.hq * grid.hq);

    for (int k = 0; k < grid.nq; ++k) {
        for (int j = 0; j < g2.n2; ++j) {
            for (int i = 0; i < g2.n1; ++i) {
                const std::size_t row = grid.row(i, j, k);
                const double w0 = tc.Cq[tc.eidx(i, j, k)];  // sqrt(gS) f at the node
                weight[row] = w0;
                f_nodes[row] = tc.f[tc.eidx(i, j, k)];
                const double inv_w = 1.0 / w0;

                add_tangential_stencil(
                    b, g2, i, j, row, inv_w,
                    [&](int a, int bb) { return tc.C11[tc.eidx(a, bb, k)]; },
                    [&](int a, int bb) { return tc.C12[tc.eidx(a, bb, k)]; },
                    [&](int a, int bb) { return tc.C22[tc.eidx(a, bb, k)]; },
                    [&](int a, int bb) { return grid.row(a, bb, k); });

                // q-direction flux, Dirichlet walls at k = -1 and k = nq
                const double cqU = 0.5 * (tc.Cq[tc.eidx(i, j, k)] + tc.Cq[tc.eidx(i, j, k + 1)]);
                const double cqD = 0.5 * (tc.Cq[tc.eidx(i, j, k - 1)] + tc.Cq[tc.eidx(i, j, k)]);
                b.add(row, row, inv_w * (cqU + cqD) * ihqhq);
                if (k + 1 < grid.nq) b.add(row, grid.row(i, j, k + 1), -inv_w * cqU * ihqhq);
                if (k - 1 >= 0) b.add(row, grid.row(i, j, k - 1), -inv_w * cqD * ihqhq);
            }
        }
    }

    Hamiltonian3D h;
    h.op = b.build(std::move(weight));
    h.grid = grid;
    h.cache = cache;
    h.f = std::move(f_nodes);
    h.epsilon = grid.epsilon;
    h.surface = patch.name;
    return h;
}

Symmetrized symmetrize(const SparseOperator& a) {
    std::vector<double> sqw(a.n), isqw(a.n);
    for (std::size_t i = 0; i < a.n; ++i) {
        if (!(a.weight[i] > 0.0)) throw AssembleError("nonpositive weight entry");
        sqw[i] = std::sqrt(a.weight[i]);
        isqw[i] = 1.0 / sqw[i];
    }
    SparseOperator s = scale_cols(scale_rows(a, sqw), isqw);
    SparseOperator st = transpose(s);

    Symmetrized out;
    out.defect = subtract(s, st).max_abs();

    SparseOperator neg = st;
    for (double& v : neg.val) v = -v;
    SparseOperator sum = subtract(s, neg);  // s + st
    for (double& v : sum.val) v *= 0.5;
    sum.weight.assign(sum.n, 1.0);
    out.op = std::move(sum);
    return out;
}

} // namespace sqm
