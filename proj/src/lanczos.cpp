#include "sqm/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "sqm/errors.hpp"

namespace sqm {

namespace detail {

void tridiag_eigen(std::vector<double>& d, std::vector<double>& e, std::vector<double>* z,
                   int m) {
    if (m == 0) return;
    e.resize(m, 0.0);  // e[m-1] used as workspace

    for (int l = 0; l < m; ++l) {
        int iter = 0;
        int split;
        do {
            for (split = l; split < m - 1; ++split) {
                const double dd = std::abs(d[split]) + std::abs(d[split + 1]);
                if (std::abs(e[split]) <= 1e-300 || std::abs(e[split]) <= 2.3e-16 * dd) break;
            }
            if (split != l) {
                if (iter++ == 64) throw SolverError("tridiagonal QL failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[split] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = split - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[split] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        double* zz = z->data();
                        for (int row = 0; row < m; ++row) {
                            f = zz[row * m + i + 1];
                            zz[row * m + i + 1] = s * zz[row * m + i] + c * f;
                            zz[row * m + i] = c * zz[row * m + i] - s * f;
                        }
                    }
                }
                if (r == 0.0 && split - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[split] = 0.0;
            }
        } while (split != l);
    }

    // ascending sort with matching eigenvector columns
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
    std::vector<double> ds(m);
    for (int i = 0; i < m; ++i) ds[i] = d[order[i]];
    d = ds;
    if (z) {
        std::vector<double> zs(std::size_t(m) * m);
        for (int row = 0; row < m; ++row)
            for (int ccol = 0; ccol < m; ++ccol)
                zs[std::size_t(row) * m + ccol] = (*z)[std::size_t(row) * m + order[ccol]];
        *z = std::move(zs);
    }
}

} // namespace detail

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

double nrm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

} // namespace

Spectrum smallest_eigenpairs(const SparseOperator& op, int k, double tol, std::uint64_t seed,
                             int max_iter, bool exclude_constant) {
    const std::size_t n = op.n;
    if (k < 1) throw SolverError("k must be positive");
    if (std::size_t(k) > n) throw SolverError("k exceeds operator dimension");
    if (!(tol > 0.0)) throw SolverError("tol must be positive");

    Spectrum spec;
    spec.seed = seed;

    std::vector<double> cvec;
    if (exclude_constant) cvec.assign(n, 1.0 / std::sqrt(double(n)));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    auto random_vector = [&] {
        std::vector<double> v(n);
        for (double& x : v) x = uni(rng);
        return v;
    };

    std::vector<std::vector<double>> V;
    std::vector<double> alpha, beta;

    auto orthogonalize = [&](std::vector<double>& w) {
        if (exclude_constant) axpy(-dot(cvec, w), cvec, w);
        for (const auto& v : V) axpy(-dot(v, w), v, w);
    };

    std::vector<double> v = random_vector();
    orthogonalize(v);
    {
        const double nv = nrm2(v);
        for (double& x : v) x /= nv;
    }
    V.push_back(v);

    const int m_cap = std::min<std::size_t>(n, std::size_t(std::max(max_iter, k)));
    double normest = 0.0;

    std::vector<double> theta;   // Ritz values at the last check
    std::vector<double> ritz_z;  // tridiagonal eigenvectors at the last check
    int m_checked = 0;

    auto check_converged = [&](int m) -> bool {
        theta.assign(alpha.begin(), alpha.begin() + m);
        std::vector<double> off(beta.begin(), beta.begin() + (m > 0 ? m - 1 : 0));
        ritz_z.assign(std::size_t(m) * m, 0.0);
        for (int i = 0; i < m; ++i) ritz_z[std::size_t(i) * m + i] = 1.0;
        detail::tridiag_eigen(theta, off, &ritz_z, m);
        m_checked = m;
        normest = std::max({normest, std::abs(theta.front()), std::abs(theta.back())});
        if (m < k) return false;
        const double blast = beta.size() >= std::size_t(m) ? beta[m - 1] : 0.0;
        for (int i = 0; i < k; ++i) {
            const double bound = std::abs(blast * ritz_z[std::size_t(m - 1) * m + i]);
            if (bound > tol * normest) return false;
        }
        return true;
    };

    bool done = false;
    int m = 0;
    while (m < m_cap && !done) {
        const std::vector<double>& vj = V.back();
        std::vector<double> w = op.apply(vj);
        if (m > 0) axpy(-beta[m - 1], V[m - 1], w);
        const double a = dot(vj, w);
        axpy(-a, vj, w);
        alpha.push_back(a);

        // full reorthogonalization; a second pass when cancellation was heavy
        const double pre = nrm2(w);
        orthogonalize(w);
        double b = nrm2(w);
        if (b < 0.7 * pre) {
            orthogonalize(w);
            b = nrm2(w);
        }
        ++m;
        spec.iterations = m;

        const double tiny = 1e-14 * std::max(1.0, normest);
        if (b <= tiny) {
            // invariant subspace; deflate with a fresh direction if room remains
            if (m >= k && check_converged(m)) {
                done = true;
                break;
            }
            if (std::size_t(m) >= n) {
                done = check_converged(m);
                break;
            }
            std::vector<double> fresh = random_vector();
            orthogonalize(fresh);
            const double nf = nrm2(fresh);
            if (nf <= tiny) {
                done = check_converged(m);
                break;
            }
            for (double& x : fresh) x /= nf;
            beta.push_back(0.0);
            V.push_back(std::move(fresh));
            continue;
        }

        beta.push_back(b);
        for (double& x : w) x /= b;
        V.push_back(std::move(w));

        if (m >= k) {
            const int interval = std::max(10, m / 8);
            if (m == k || m % interval == 0 || m == m_cap || std::size_t(m) == n) {
                if (check_converged(m)) done = true;
            }
        }
    }

    if (!done) done = m >= k && check_converged(m);
    spec.converged = done;

    if (m_checked < k) throw SolverError("Lanczos produced fewer Ritz values than requested");

    // assemble Ritz vectors from the last checked factorization
    const int mm = m_checked;
    spec.eigenvalues.assign(theta.begin(), theta.begin() + k);
    spec.eigenvectors.assign(k, std::vector<double>(n, 0.0));
    for (int i = 0; i < k; ++i) {
        auto& x = spec.eigenvectors[i];
        for (int j = 0; j < mm; ++j) {
            const double s = ritz_z[std::size_t(j) * mm + i];
            if (s != 0.0) axpy(s, V[j], x);
        }
        const double nx = nrm2(x);
        for (double& xv : x) xv /= nx;
    }

    spec.op_norm_est = normest;
    spec.residuals.resize(k);
    for (int i = 0; i < k; ++i) {
        std::vector<double> r = op.apply(spec.eigenvectors[i]);
        axpy(-spec.eigenvalues[i], spec.eigenvectors[i], r);
        spec.residuals[i] = nrm2(r) / (normest > 0 ? normest : 1.0);
    }
    if (spec.converged)
        for (int i = 0; i < k; ++i)
            if (spec.residuals[i] > 10.0 * tol) spec.converged = false;

    return spec;
}

std::vector<double> residual_report(const SparseOperator& op, const Spectrum& spec) {
    std::vector<double> out(spec.eigenvalues.size());
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
        std::vector<double> r = op.apply(spec.eigenvectors[i]);
        axpy(-spec.eigenvalues[i], spec.eigenvectors[i], r);
        out[i] = nrm2(r) / (spec.op_norm_est > 0 ? spec.op_norm_est : 1.0);
    }
    return out;
}

} // namespace sqm
