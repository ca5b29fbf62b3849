// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

// Unnormalized centered DFTs over odd lengths, backed by FFTW.
//
// Element i of a length-N axis holds centered index n = i - (N-1)/2. The
// transform computes X[k] = sum_n x[n] exp(sign * 2*pi*j * k*n / N) with both
// n and k centered; for odd N this is a pure index rotation around a
// standard FFT.

#pragma once

#include <Eigen/Dense>

namespace bargmann::detail {

enum class FftSign { negative = -1, positive = +1 };

/// Transforms every column of `m` in place.
void centered_fft_columns(Eigen::MatrixXcd& m, FftSign sign);

/// Transforms every row of `m` in place.
void centered_fft_rows(Eigen::MatrixXcd& m, FftSign sign);

/// Transforms a single vector in place.
void centered_fft(Eigen::VectorXcd& v, FftSign sign);

}  // namespace bargmann::detail
