#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "sqm/sparse.hpp"

using namespace sqm;

namespace {

SparseOperator random_sparse(std::mt19937_64& rng, std::size_t n, double density = 0.3) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> p(0.0, 1.0);
    SparseBuilder b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p(rng) < density) b.add(i, j, u(rng));
    std::vector<double> w(n);
    for (double& x : w) x = 0.1 + p(rng);
    return b.build(std::move(w));
}

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = u(rng);
    return v;
}

} // namespace

TEST_CASE("builder merges duplicate triplets and sorts columns") {
    SparseBuilder b(3);
    b.add(1, 2, 1.0);
    b.add(0, 1, 2.0);
    b.add(1, 2, 0.5);
    b.add(1, 0, -1.0);
    const SparseOperator a = b.build({1.0, 1.0, 1.0});
    CHECK(a.nnz() == 3);
    CHECK(a.row_ptr[0] == 0);
    CHECK(a.row_ptr[1] == 1);
    CHECK(a.row_ptr[2] == 3);
    CHECK(a.row_ptr[3] == 3);
    CHECK(a.col[1] == 0);
    CHECK(a.col[2] == 2);
    CHECK(a.val[2] == 1.5);
    const std::vector<double> y = a.apply({1.0, 1.0, 1.0});
    CHECK(y[0] == 2.0);
    CHECK(y[1] == 0.5);
    CHECK(y[2] == 0.0);
}

TEST_CASE("transpose round-trips and matches the pairing") {
    std::mt19937_64 rng(31);
    const SparseOperator a = random_sparse(rng, 12);
    const SparseOperator at = transpose(a);
    const SparseOperator att = transpose(at);
    CHECK(subtract(a, att).max_abs() == 0.0);

    const std::vector<double> x = random_vec(rng, 12), y = random_vec(rng, 12);
    const std::vector<double> ax = a.apply(x), aty = at.apply(y);
    double lhs = 0, rhs = 0;
    for (std::size_t i = 0; i < 12; ++i) {
        lhs += y[i] * ax[i];
        rhs += aty[i] * x[i];
    }
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("subtract handles disjoint and overlapping patterns") {
    SparseBuilder ba(2), bb(2);
    ba.add(0, 0, 3.0);
    ba.add(1, 0, 2.0);
    bb.add(0, 1, 1.0);
    bb.add(1, 0, 2.0);
    const SparseOperator diff =
        subtract(ba.build({1.0, 1.0}), bb.build({1.0, 1.0}));
    const std::vector<double> y = diff.apply({1.0, 1.0});
    CHECK(y[0] == 2.0);  // 3 - 1
    CHECK(y[1] == 0.0);
}

TEST_CASE("weighted symmetry defect detects the skew part exactly") {
    // A = [[0,1],[0,0]] with unit weight: WA - A^T W has entries +-1
    SparseBuilder b(2);
    b.add(0, 1, 1.0);
    const SparseOperator a = b.build({1.0, 1.0});
    CHECK(weighted_symmetry_defect(a, {1.0, 1.0}) == 1.0);
    CHECK(weighted_antisymmetry_defect(a, {1.0, 1.0}) == 1.0);

    SparseBuilder c(2);
    c.add(0, 1, 1.0);
    c.add(1, 0, -1.0);
    const SparseOperator skew = c.build({1.0, 1.0});
    CHECK(weighted_antisymmetry_defect(skew, {1.0, 1.0}) == 0.0);
    CHECK(weighted_symmetry_defect(skew, {1.0, 1.0}) == 2.0);
}

TEST_CASE("MatrixMarket dump: symmetric lower-triangle coordinate format") {
    SparseBuilder b(3);
    b.add(0, 0, 2.0);
    b.add(0, 1, -1.0);
    b.add(1, 0, -1.0);
    b.add(1, 1, 2.0);
    b.add(2, 2, 2.0);
    const SparseOperator a = b.build({1.0, 1.0, 1.0});
    std::ostringstream os;
    write_matrix_market(os, a);
    const std::string text = os.str();
    CHECK(text.rfind("%%MatrixMarket matrix coordinate real symmetric\n", 0) == 0);
    CHECK(text.find("3 3 4\n") != std::string::npos);   // dims + lower-triangle count
    CHECK(text.find("2 1 -1\n") != std::string::npos);  // 1-based indices
    CHECK(text.find("1 2 ") == std::string::npos);      // upper triangle omitted
}
