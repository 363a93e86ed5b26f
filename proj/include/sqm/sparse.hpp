#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sqm {

/// Symmetric-intent sparse matrix in CSR layout together with the diagonal
/// weight (mass) vector w defining its inner product <u,v>_w = sum w_i u_i v_i.
///
/// The matrix itself need not be symmetric entrywise; self-adjointness is
/// always relative to `weight`. Rows keep their columns sorted.
struct SparseOperator {
    std::size_t n = 0;
    std::vector<std::size_t> row_ptr;  // size n+1
    std::vector<std::size_t> col;
    std::vector<double> val;
    std::vector<double> weight;        // size n, entries > 0

    std::size_t nnz() const { return val.size(); }

    void apply(const double* x, double* y) const;
    std::vector<double> apply(const std::vector<double>& x) const;

    /// max_i sum_j |a_ij| (operator inf-norm).
    double inf_norm() const;
    /// max |a_ij|.
    double max_abs() const;
};

/// Triplet accumulator; duplicate (row, col) entries are summed on build.
class SparseBuilder {
public:
    explicit SparseBuilder(std::size_t n) : n_(n) {}

    void add(std::size_t r, std::size_t c, double v) {
        rows_.push_back(r);
        cols_.push_back(c);
        vals_.push_back(v);
    }

    SparseOperator build(std::vector<double> weight) const;

private:
    std::size_t n_;
    std::vector<std::size_t> rows_, cols_;
    std::vector<double> vals_;
};

SparseOperator transpose(const SparseOperator& a);

/// Entrywise a - b over the merged sparsity pattern (weights taken from a).
SparseOperator subtract(const SparseOperator& a, const SparseOperator& b);

/// diag(d) * a (row scaling), a * diag(d) (column scaling).
SparseOperator scale_rows(const SparseOperator& a, const std::vector<double>& d);
SparseOperator scale_cols(const SparseOperator& a, const std::vector<double>& d);

/// max |(W A - A^T W)_ij|: deviation from self-adjointness in <,>_w.
double weighted_symmetry_defect(const SparseOperator& a, const std::vector<double>& w);
/// max |(W A + A^T W)_ij|: deviation from skew-adjointness in <,>_w.
double weighted_antisymmetry_defect(const SparseOperator& a, const std::vector<double>& w);

/// MatrixMarket coordinate-format dump (lower triangle, 1-based indices)
/// with header "%%MatrixMarket matrix coordinate real symmetric".
void write_matrix_market(std::ostream& os, const SparseOperator& a);

} // namespace sqm
