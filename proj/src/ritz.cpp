#include "nodoid/ritz.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <utility>

#include "nodoid/errors.hpp"
#include "nodoid/parallel.hpp"
#include "nodoid/quadrature.hpp"

namespace nodoid::ritz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int frequency(int j) { return j / 2; }

void check_size(int n) {
    if (n < 1) throw DomainError("basis size must be at least 1, got " + std::to_string(n));
}

std::vector<std::pair<int, int>> upper_entries(int n) {
    std::vector<std::pair<int, int>> entries;
    for (int j = 1; j <= n; ++j) {
        for (int k = j; k <= n; ++k) {
            if (!parity_zero(j, k)) entries.emplace_back(j, k);
        }
    }
    return entries;
}

}  // namespace

double SquareMatrix::asymmetry() const {
    double worst = 0.0;
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    }
    return worst;
}

double SquareMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

double basis_eval(int j, double t, double a, double b) {
    if (j < 1) throw DomainError("basis index must be >= 1, got " + std::to_string(j));
    const double len = b - a;
    if (j == 1) return 1.0 / std::sqrt(len);
    const double arg = kTwoPi * frequency(j) * (t - a) / len;
    const double scale = std::sqrt(2.0 / len);
    return (j % 2 == 0) ? scale * std::cos(arg) : scale * std::sin(arg);
}

double stiffness_entry(int j, int k, double a, double b) {
    if (j != k) return 0.0;
    const double f = frequency(j);
    const double len = b - a;
    return f * f * 4.0 * std::numbers::pi * std::numbers::pi / (len * len);
}

int reflection_parity(int j, int point) {
    if (j < 1) throw DomainError("basis index must be >= 1, got " + std::to_string(j));
    if (point < 0 || point > 4) throw DomainError("symmetry point index must be in 0..4");
    if (j == 1) return 1;
    const bool cosine = (j % 2 == 0);
    const bool odd_freq = (frequency(j) % 2 == 1);
    // Reflections about a, (a+b)/2, b act on s as s -> -s modulo the period;
    // those about the quarter points act as s -> 1/2 - s.
    if (point % 2 == 0) return cosine ? 1 : -1;
    if (cosine) return odd_freq ? -1 : 1;
    return odd_freq ? 1 : -1;
}

bool parity_zero(int j, int k) {
    for (int point = 0; point < 5; ++point) {
        if (reflection_parity(j, point) != reflection_parity(k, point)) return true;
    }
    return false;
}

double potential_entry(const NodoidParams& p, int j, int k, double quad_tol) {
    if (j < 1 || k < 1) throw DomainError("basis indices must be >= 1");
    if (parity_zero(j, k)) return 0.0;
    const double a = p.a(), b = p.b();
    quadrature::SimpsonOptions opts;
    opts.abs_tol = quad_tol;
    // Enough initial panels to resolve the highest product frequency.
    opts.initial_panels = 16 + 4 * (frequency(j) + frequency(k));
    auto integrand = [&](double t) {
        return potential(p, t) * basis_eval(j, t, a, b) * basis_eval(k, t, a, b);
    };
    try {
        return quadrature::adaptive_simpson(integrand, a, b, opts);
    } catch (const NumericalError& e) {
        throw NumericalError("potential matrix entry (" + std::to_string(j) + ", " +
                             std::to_string(k) + "): " + e.what());
    }
}

SquareMatrix potential_matrix(const NodoidParams& p, int n, double quad_tol) {
    check_size(n);
    SquareMatrix mat(n);
    for (const auto& [j, k] : upper_entries(n)) {
        const double v = potential_entry(p, j, k, quad_tol);
        mat(j - 1, k - 1) = v;
        mat(k - 1, j - 1) = v;
    }
    return mat;
}

SquareMatrix potential_matrix_parallel(const NodoidParams& p, int n, double quad_tol) {
    check_size(n);
    const auto entries = upper_entries(n);
    const int count = static_cast<int>(entries.size());
    std::vector<double> values(entries.size(), 0.0);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
    for (int e = 0; e < count; ++e) {
        try {
            const auto [j, k] = entries[static_cast<std::size_t>(e)];
            values[static_cast<std::size_t>(e)] = potential_entry(p, j, k, quad_tol);
        } catch (...) {
#pragma omp critical(nodoid_ritz_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    SquareMatrix mat(n);
    for (std::size_t e = 0; e < entries.size(); ++e) {
        const auto [j, k] = entries[e];
        mat(j - 1, k - 1) = values[e];
        mat(k - 1, j - 1) = values[e];
    }
    return mat;
}

SquareMatrix galerkin_matrix(const NodoidParams& p, int n, double quad_tol) {
    SquareMatrix alpha = potential_matrix_parallel(p, n, quad_tol);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) alpha(i, j) = -alpha(i, j);
        alpha(i, i) += stiffness_entry(i + 1, i + 1, p.a(), p.b());
    }
    return alpha;
}

SquareMatrix galerkin_submatrix(const NodoidParams& p, std::span<const int> indices,
                                double quad_tol) {
    const int n = static_cast<int>(indices.size());
    check_size(n);
    SquareMatrix alpha(n);
    for (int r = 0; r < n; ++r) {
        for (int c = r; c < n; ++c) {
            const int j = indices[static_cast<std::size_t>(r)];
            const int k = indices[static_cast<std::size_t>(c)];
            const double v = stiffness_entry(j, k, p.a(), p.b()) - potential_entry(p, j, k, quad_tol);
            alpha(r, c) = v;
            alpha(c, r) = v;
        }
    }
    return alpha;
}

std::vector<double> symmetric_eigenvalues(SquareMatrix a) {
    const int n = a.size();
    const double norm = a.frobenius_norm();
    if (a.asymmetry() > 1e-12 * std::max(1.0, norm)) {
        throw DomainError("symmetric_eigenvalues: matrix is not symmetric");
    }
    auto off_norm = [&a, n] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };
    const double target = 1e-12 * norm;
    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (off_norm() >= target && norm > 0.0) {
        if (++sweep > kMaxSweeps) throw NumericalError("Jacobi rotations did not converge");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    const double new_rp = arp - s * (arq + tau * arp);
                    const double new_rq = arq + s * (arp - tau * arq);
                    a(r, p) = a(p, r) = new_rp;
                    a(r, q) = a(q, r) = new_rq;
                }
            }
        }
    }
    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

RitzSpectrum spectrum_estimate(const NodoidParams& p, int n, double quad_tol) {
    RitzSpectrum out;
    out.n = n;
    out.m = p.m();
    out.quad_tol = quad_tol;
    out.eigenvalues = symmetric_eigenvalues(galerkin_matrix(p, n, quad_tol));
    return out;
}

double symmetric_subspace_estimate(const NodoidParams& p, int k_max, double quad_tol) {
    if (k_max < 0) throw DomainError("k_max must be non-negative");
    std::vector<int> indices{1};
    for (int k = 1; k <= k_max; ++k) indices.push_back(4 * k);
    return symmetric_eigenvalues(galerkin_submatrix(p, indices, quad_tol)).front();
}

}  // namespace nodoid::ritz
