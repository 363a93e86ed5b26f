#include "sqm/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "sqm/errors.hpp"

namespace sqm {

void SparseOperator::apply(const double* x, double* y) const {
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t p = row_ptr[i]; p < row_ptr[i + 1]; ++p) acc += val[p] * x[col[p]];
        y[i] = acc;
    }
}

std::vector<double> SparseOperator::apply(const std::vector<double>& x) const {
    std::vector<double> y(n);
    apply(x.data(), y.data());
    return y;
}

double SparseOperator::inf_norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t p = row_ptr[i]; p < row_ptr[i + 1]; ++p) s += std::abs(val[p]);
        best = std::max(best, s);
    }
    return best;
}

double SparseOperator::max_abs() const {
    double best = 0.0;
    for (double v : val) best = std::max(best, std::abs(v));
    return best;
}

SparseOperator SparseBuilder::build(std::vector<double> weight) const {
    if (weight.size() != n_) throw AssembleError("weight size mismatch");
    SparseOperator a;
    a.n = n_;
    a.weight = std::move(weight);

    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
        if (rows_[p] != rows_[q]) return rows_[p] < rows_[q];
        return cols_[p] < cols_[q];
    });

    a.row_ptr.assign(n_ + 1, 0);
    std::size_t last_r = SIZE_MAX, last_c = SIZE_MAX;
    for (std::size_t idx : order) {
        const std::size_t r = rows_[idx], c = cols_[idx];
        if (r >= n_ || c >= n_) throw AssembleError("triplet index out of range");
        if (r == last_r && c == last_c) {
            a.val.back() += vals_[idx];
            continue;
        }
        a.col.push_back(c);
        a.val.push_back(vals_[idx]);
        a.row_ptr[r + 1] = a.col.size();
        last_r = r;
        last_c = c;
    }
    for (std::size_t r = 1; r <= n_; ++r)
        a.row_ptr[r] = std::max(a.row_ptr[r], a.row_ptr[r - 1]);
    return a;
}

SparseOperator transpose(const SparseOperator& a) {
    SparseOperator t;
    t.n = a.n;
    t.weight = a.weight;
    t.row_ptr.assign(a.n + 1, 0);
    for (std::size_t c : a.col) ++t.row_ptr[c + 1];
    for (std::size_t i = 0; i < a.n; ++i) t.row_ptr[i + 1] += t.row_ptr[i];
    t.col.resize(a.nnz());
    t.val.resize(a.nnz());
    std::vector<std::size_t> next(t.row_ptr.begin(), t.row_ptr.end() - 1);
    for (std::size_t i = 0; i < a.n; ++i) {
        for (std::size_t p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
            const std::size_t pos = next[a.col[p]]++;
            t.col[pos] = i;
            t.val[pos] = a.val[p];
        }
    }
    return t;  // rows are sorted because source rows were visited in order
}

SparseOperator subtract(const SparseOperator& a, const SparseOperator& b) {
    if (a.n != b.n) throw AssembleError("dimension mismatch");
    SparseOperator r;
    r.n = a.n;
    r.weight = a.weight;
    r.row_ptr.assign(a.n + 1, 0);
    for (std::size_t i = 0; i < a.n; ++i) {
        std::size_t pa = a.row_ptr[i], ea = a.row_ptr[i + 1];
        std::size_t pb = b.row_ptr[i], eb = b.row_ptr[i + 1];
        while (pa < ea || pb < eb) {
            std::size_t ca = pa < ea ? a.col[pa] : SIZE_MAX;
            std::size_t cb = pb < eb ? b.col[pb] : SIZE_MAX;
            if (ca < cb) {
                r.col.push_back(ca);
                r.val.push_back(a.val[pa++]);
            } else if (cb < ca) {
                r.col.push_back(cb);
                r.val.push_back(-b.val[pb++]);
            } else {
                r.col.push_back(ca);
                r.val.push_back(a.val[pa++] - b.val[pb++]);
            }
        }
        r.row_ptr[i + 1] = r.col.size();
    }
    return r;
}

SparseOperator scale_rows(const SparseOperator& a, const std::vector<double>& d) {
    if (d.size() != a.n) throw AssembleError("diagonal size mismatch");
    SparseOperator r = a;
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t p = r.row_ptr[i]; p < r.row_ptr[i + 1]; ++p) r.val[p] *= d[i];
    return r;
}

SparseOperator scale_cols(const SparseOperator& a, const std::vector<double>& d) {
    if (d.size() != a.n) throw AssembleError("diagonal size mismatch");
    SparseOperator r = a;
    for (std::size_t p = 0; p < r.nnz(); ++p) r.val[p] *= d[r.col[p]];
    return r;
}

double weighted_symmetry_defect(const SparseOperator& a, const std::vector<double>& w) {
    const SparseOperator wa = scale_rows(a, w);
    return subtract(wa, transpose(wa)).max_abs();
}

double weighted_antisymmetry_defect(const SparseOperator& a, const std::vector<double>& w) {
    const SparseOperator wa = scale_rows(a, w);
    const SparseOperator wat = transpose(wa);
    SparseOperator neg = wat;
    for (double& v : neg.val) v = -v;
    return subtract(wa, neg).max_abs();
}

void write_matrix_market(std::ostream& os, const SparseOperator& a) {
    os << "%%MatrixMarket matrix coordinate real symmetric\n";
    std::size_t count = 0;
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p)
            if (a.col[p] <= i) ++count;
    os << a.n << " " << a.n << " " << count << "\n";
    char buf[64];
    for (std::size_t i = 0; i < a.n; ++i) {
        for (std::size_t p = a.row_ptr[i]; p < a.row_ptr[i + 1]; ++p) {
            if (a.col[p] > i) continue;
            std::snprintf(buf, sizeof buf, "%zu %zu %.17g\n", i + 1, a.col[p] + 1, a.val[p]);
            os << buf;
        }
    }
}

} // namespace sqm
