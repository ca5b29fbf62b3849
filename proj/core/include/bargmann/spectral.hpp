// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

// Centered discrete Fourier transforms and the chirp-multiplication /
// chirp-convolution stages shared by the Gabor, gyrator and NsLCT methods.

#pragma once

#include <Eigen/Dense>

#include "bargmann/signal.hpp"

namespace bargmann {

enum class Direction { forward, inverse };

/// Spacing of the dual grid: 2*pi / (count * spacing).
double dual_spacing(const SampleGrid& grid);

/// Forward:  X[q] = d_in * sum_n x[n] exp(-j q d_out n d_in).
/// Inverse:  x[q] = (d_in / 2pi) * sum_n X[n] exp(+j q d_out n d_in).
/// Requires d_in * d_out == 2pi / N to 1e-12 relative; otherwise throws
/// GridConstraintError stating the required spacing.
Signal centered_dft_1d(const Signal& signal, Direction direction,
                       double output_spacing);

/// Axis-wise centered_dft_1d; output spacings are the dual spacings of the
/// input axes. The kind tag is preserved.
Field centered_dft_2d(const Field& field, Direction direction);

/// Symmetric complex 2x2 matrix C defining the chirp exp((j/2) z^T C z).
class ChirpMatrix2 {
 public:
  /// Throws ArgumentError if `entries` is not symmetric to 1e-12.
  explicit ChirpMatrix2(const Eigen::Matrix2cd& entries);

  const Eigen::Matrix2cd& entries() const { return entries_; }
  /// Im(C) is positive semidefinite, so |exp((j/2) z^T C z)| <= 1 everywhere.
  bool decays() const { return decays_; }
  /// The chirp restricted to the line y = 0 does not grow: Im(C_00) >= 0.
  bool decays_on_x_axis() const { return entries_(0, 0).imag() >= -kTolerance; }

  static constexpr double kTolerance = 1e-12;

 private:
  Eigen::Matrix2cd entries_;
  bool decays_;
};

/// Pointwise multiply by exp((j/2)(c00 x^2 + 2 c01 x y + c11 y^2)).
/// Throws ArgumentError for a chirp whose envelope grows.
Field chirp_multiply_2d(const Field& field, const ChirpMatrix2& c);

/// The chirp multiply evaluated only on the y = 0 line: returns
/// field(x, 0) * exp((j/2) c00 x^2) as a signal on the x grid. Requires
/// decays_on_x_axis().
Signal chirp_multiply_x_axis(const Field& field, const ChirpMatrix2& c);

/// Convolution with (2pi sqrt(-det B))^-1 exp((j/2) u^T B^-1 u), evaluated
/// in the spectral domain by multiplying with the analytic kernel spectrum
/// exp(-(j/2) w^T B w). B must be symmetric and nonsingular; a singular B
/// throws ArgumentError (use the B = 0 branch of the NsLCT instead).
Field chirp_convolve_2d(const Field& field, const Eigen::Matrix2cd& b);

}  // namespace bargmann
