// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

// Transform by discrete Hermite-Gaussian analysis followed by
// Laguerre-Gaussian synthesis, in matrix form: S = H S~ H^T.

#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "bargmann/signal.hpp"

namespace bargmann {

/// N x N orthonormal matrix whose column n is the discrete HG function of
/// order n on `grid`.
class HgBasis {
 public:
  HgBasis(SampleGrid grid, Eigen::MatrixXd matrix);

  const SampleGrid& grid() const { return grid_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  std::size_t size() const { return grid_.count(); }

 private:
  SampleGrid grid_;
  Eigen::MatrixXd matrix_;
};

/// Samples sqrt(dt) HG_n for n = 0..N-1 and orthonormalizes in mode order
/// (Householder QR, column signs chosen so that R has a positive diagonal).
/// Column n keeps exactly n sign changes and a positive overlap with the
/// sampled HG_n. Throws NumericalError when the sampled matrix is
/// numerically rank deficient (|R_nn| < 1e-10).
HgBasis build_hg_basis(const SampleGrid& grid);

/// s^ = H^T s. Throws ArgumentError if the grids differ.
Eigen::VectorXcd hg_coefficients(const Signal& signal, const HgBasis& basis);

/// Twice-valued half-integer: HalfInt::from_twice(3) is 3/2.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int value) : twice_(2 * value) {}  // NOLINT(google-explicit-constructor)
  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool operator==(const HalfInt&) const = default;

 private:
  int twice_ = 0;
};

/// Wigner small-d d^J_{M,Mp}(pi/2), first index the row, using the
/// standard alternating sum with log-factorial terms. Throws ArgumentError
/// unless J >= 0, |M| <= J, |Mp| <= J and J - M, J - Mp are integers.
double wigner_d_pi2(HalfInt j, HalfInt m, HalfInt mp);

/// c[n,k] = j^(n-k) 2^(-n/2) sqrt(binom(n, k)): coefficient of
/// HG_k(x) HG_{n-k}(y) in LG_{0,n}(x, y). Equals j^(n-k) d^{n/2}_{n/2-k, n/2}(pi/2).
/// Throws ArgumentError unless 0 <= k <= n.
Complex coupling_coefficient(int n, int k);

/// c[n,k] for 0 <= k <= n < size, stored row by row.
class CouplingTable {
 public:
  explicit CouplingTable(std::size_t size);

  std::size_t size() const { return size_; }
  Complex operator()(std::size_t n, std::size_t k) const {
    return values_[n * (n + 1) / 2 + k];
  }

 private:
  std::size_t size_;
  std::vector<Complex> values_;
};

/// S = H S~ H^T / sqrt(dt) with S~[k, n-k] = s^_n c[n,k]. Output grid
/// dx = dy = dt, N x N. Throws ArgumentError if the signal grid differs from
/// the basis grid.
Field forward_hg(const Signal& signal, const HgBasis& basis);

/// S~ = sqrt(dt) H^T S H, s^_n by least squares along each anti-diagonal,
/// s = H s^. The field must be N x N on the basis grid.
Signal inverse_hg(const Field& field, const HgBasis& basis);

/// Zero-pads a signal symmetrically to `count` samples (odd, >= current),
/// keeping the spacing. Widening the grid pushes the basis boundary error
/// to higher orders.
Signal zero_pad(const Signal& signal, std::size_t count);

}  // namespace bargmann
