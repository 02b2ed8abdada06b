#pragma once

// Rayleigh-Ritz estimates of the spectrum of L0 = -d^2/dt^2 - V on periodic
// functions over [a, b], in the orthonormal Fourier basis
//   B_1 = 1/sqrt(L),  B_j = sqrt(2/L) cos(2 pi (j/2) s)      (j even),
//                     B_j = sqrt(2/L) sin(2 pi ((j-1)/2) s)  (j odd, j >= 3),
// with L = b - a and s = (t - a)/L. Indices are 1-based as in the basis.
// The n x n estimates decrease monotonically to the true eigenvalues as n grows.

#include <span>
#include <vector>

#include "nodoid/geometry.hpp"

namespace nodoid::ritz {

/// Dense square matrix, row-major, 0-based element access.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const noexcept { return n_; }
    double& operator()(int i, int j) { return data_[index(i, j)]; }
    double operator()(int i, int j) const { return data_[index(i, j)]; }
    std::span<const double> data() const noexcept { return data_; }

    /// Largest |A(i,j) - A(j,i)|.
    double asymmetry() const;
    double frobenius_norm() const;

    bool operator==(const SquareMatrix&) const = default;

private:
    std::size_t index(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<double> data_;
};

struct RitzSpectrum {
    int n = 0;
    double m = 0.0;
    double quad_tol = 0.0;
    std::vector<double> eigenvalues;  // ascending
};

inline constexpr double kDefaultQuadTol = 1e-10;
inline constexpr int kDefaultBasisSize = 13;

/// Throws DomainError for j < 1.
[[nodiscard]] double basis_eval(int j, double t, double a, double b);

/// Integral of -B_j B_k'' over [a, b]: delta_jk floor(j/2)^2 4 pi^2 / (b - a)^2.
[[nodiscard]] double stiffness_entry(int j, int k, double a, double b);

/// +1 or -1: parity of B_j under reflection about the i-th symmetry point
/// a, (3a+b)/4, (a+b)/2, (a+3b)/4, b (i = 0..4).
[[nodiscard]] int reflection_parity(int j, int point);

/// True when V B_j B_k is odd about some symmetry point, so its integral vanishes.
[[nodiscard]] bool parity_zero(int j, int k);

/// Integral of V B_j B_k over [a, b]; exactly 0 when parity_zero(j, k).
/// The value depends only on (p, j, k, quad_tol), never on the matrix size.
[[nodiscard]] double potential_entry(const NodoidParams& p, int j, int k,
                                     double quad_tol = kDefaultQuadTol);

/// (V B_j B_k) for j, k = 1..n; upper triangle computed and mirrored.
/// Serial reference; potential_matrix_parallel must match it bit for bit.
[[nodiscard]] SquareMatrix potential_matrix(const NodoidParams& p, int n,
                                            double quad_tol = kDefaultQuadTol);

/// OpenMP version of potential_matrix, parallel over entries.
[[nodiscard]] SquareMatrix potential_matrix_parallel(const NodoidParams& p, int n,
                                                     double quad_tol = kDefaultQuadTol);

/// alpha_jk = stiffness - potential.
[[nodiscard]] SquareMatrix galerkin_matrix(const NodoidParams& p, int n,
                                           double quad_tol = kDefaultQuadTol);

/// Galerkin matrix restricted to the given 1-based basis indices.
[[nodiscard]] SquareMatrix galerkin_submatrix(const NodoidParams& p, std::span<const int> indices,
                                              double quad_tol = kDefaultQuadTol);

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotations.
/// Throws DomainError when the input is not symmetric.
[[nodiscard]] std::vector<double> symmetric_eigenvalues(SquareMatrix matrix);

[[nodiscard]] RitzSpectrum spectrum_estimate(const NodoidParams& p, int n = kDefaultBasisSize,
                                             double quad_tol = kDefaultQuadTol);

/// Smallest eigenvalue over span{B_1, B_4, B_8, ..., B_{4 k_max}}, the
/// subspace holding the first eigenfunction. An upper bound for lambda_0.
[[nodiscard]] double symmetric_subspace_estimate(const NodoidParams& p, int k_max,
                                                 double quad_tol = kDefaultQuadTol);

}  // namespace nodoid::ritz
