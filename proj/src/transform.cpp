#include "sqm/transform.hpp"

#include <cmath>

#include "sqm/errors.hpp"

namespace sqm {

WeightedSpace make_flat_space(const Hamiltonian3D& h) {
    WeightedSpace s;
    s.kind = WeightKind::FlatInQ;
    s.label = "flat-in-q sqrt(det gS)";
    s.w.resize(h.op.n);
    for (std::size_t i = 0; i < h.op.n; ++i) s.w[i] = h.op.weight[i] / h.f[i];
    return s;
}

WeightedSpace make_tube_space(const Hamiltonian3D& h) {
    WeightedSpace s;
    s.kind = WeightKind::Tube;
    s.label = "tube sqrt(det gS) f";
    s.w = h.op.weight;
    return s;
}

ConjugationMap make_conjugation(const Hamiltonian3D& h) {
    ConjugationMap m;
    m.half.resize(h.f.size());
    m.inv_half.resize(h.f.size());
    for (std::size_t i = 0; i < h.f.size(); ++i) {
        if (!(h.f[i] > 0.0)) throw AssembleError("nonpositive f value");
        m.half[i] = std::sqrt(h.f[i]);
        m.inv_half[i] = 1.0 / m.half[i];
    }
    return m;
}

SparseOperator weighted_adjoint(const SparseOperator& a, const WeightedSpace& space) {
    if (space.w.size() != a.n) throw AssembleError("weighted_adjoint: dimension mismatch");
    std::vector<double> inv_w(a.n);
    for (std::size_t i = 0; i < a.n; ++i) inv_w[i] = 1.0 / space.w[i];
    SparseOperator adj = scale_rows(scale_cols(transpose(a), space.w), inv_w);
    adj.weight = space.w;
    return adj;
}

SelfAdjointized selfadjointize(const Hamiltonian3D& h) {
    if (h.f.size() != h.op.n) throw AssembleError("selfadjointize: missing f values");
    const ConjugationMap conj = make_conjugation(h);

    SelfAdjointized out;
    out.op = scale_cols(scale_rows(h.op, conj.half), conj.inv_half);
    const WeightedSpace flat = make_flat_space(h);
    out.op.weight = flat.w;

    const SparseOperator wl = scale_rows(out.op, flat.w);
    const double scale = wl.max_abs();
    out.flat_defect = subtract(wl, transpose(wl)).max_abs() / (scale > 0 ? scale : 1.0);
    return out;
}

SparseOperator normal_momentum(const Grid3& grid) {
    if (grid.nq < 3) throw AssembleError("normal_momentum needs nq >= 3");
    SparseBuilder b(grid.size());
    const double c = 1.0 / (2.0 * grid.hq);
    for (int k = 0; k < grid.nq; ++k) {
        for (int j = 0; j < grid.base.n2; ++j) {
            for (int i = 0; i < grid.base.n1; ++i) {
                const std::size_t row = grid.row(i, j, k);
                if (k + 1 < grid.nq) b.add(row, grid.row(i, j, k + 1), c);
                if (k - 1 >= 0) b.add(row, grid.row(i, j, k - 1), -c);
            }
        }
    }
    return b.build(std::vector<double>(grid.size(), 1.0));
}

SparseOperator kernel_projection(const Grid3& grid) {
    SparseBuilder b(grid.size());
    const double c = 1.0 / grid.nq;
    for (int k = 0; k < grid.nq; ++k)
        for (int kk = 0; kk < grid.nq; ++kk)
            for (int j = 0; j < grid.base.n2; ++j)
                for (int i = 0; i < grid.base.n1; ++i)
                    b.add(grid.row(i, j, k), grid.row(i, j, kk), c);
    return b.build(std::vector<double>(grid.size(), 1.0));
}

std::vector<double> restrict_to_surface(const SparseOperator& L, const Grid3& grid,
                                        const std::vector<double>& test, int layer) {
    if (test.size() != grid.base.size())
        throw AssembleError("restrict_to_surface: test vector must live on the 2D grid");
    if (layer < 0) {
        if (grid.nq % 2 == 0)
            throw AssembleError("restrict_to_surface: nq must be odd for an exact q=0 layer");
        layer = grid.center_layer();
    }
    if (layer >= grid.nq) throw AssembleError("restrict_to_surface: layer out of range");

    std::vector<double> embedded(grid.size());
    for (int k = 0; k < grid.nq; ++k)
        for (std::size_t m = 0; m < grid.base.size(); ++m)
            embedded[grid.base.size() * k + m] = test[m];

    const std::vector<double> image = L.apply(embedded);

    std::vector<double> slice(grid.base.size());
    const std::size_t off = grid.base.size() * layer;
    for (std::size_t m = 0; m < grid.base.size(); ++m) slice[m] = image[off + m];
    return slice;
}

} // namespace sqm
