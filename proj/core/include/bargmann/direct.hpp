// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

// Reference transform by direct summation of the sampled kernel, and the
// conversion from the normalized to the unnormalized transform.

#pragma once

#include <cstddef>
#include <vector>

#include "bargmann/signal.hpp"

namespace bargmann {

/// S(x, y) = pi^(-3/4) dt sum_n exp(-x^2 - jxy + sqrt2 (x + jy) t_n - t_n^2/2) s[n]
/// on an arbitrary output grid. O(Nx Ny N), index-ascending summation.
Field forward_direct(const Signal& signal, const FieldGrid& out);

/// s(t) = pi^(-3/4) dx dy sum_{p,q} exp(-x^2 + jxy + sqrt2 (x - jy) t - t^2/2) S[p,q].
/// Throws ArgumentError unless the field kind is normalized.
Signal inverse_direct(const Field& field, const SampleGrid& out);

/// Output grid on which the direct method is exactly invertible for
/// well-contained signals: dx = dt/sqrt2, dy = 2pi/(N dt sqrt2), N x N.
FieldGrid direct_default_grid(const SampleGrid& signal_grid);

/// Default time grid for inverse_direct given a field grid: N = Nx,
/// dt = sqrt2 dx.
SampleGrid direct_default_signal_grid(const FieldGrid& field_grid);

struct Cell {
  std::size_t p;
  std::size_t q;
};

/// S_B = 2^(-1/4) pi^(1/4) exp((x^2 + y^2)/2) S_NB, evaluated in log form.
/// Cells whose magnitude would overflow are saturated to DBL_MAX with the
/// original phase and appended to `saturated` when it is non-null.
/// Throws ArgumentError unless the field kind is normalized.
Field to_unnormalized(const Field& field, std::vector<Cell>* saturated = nullptr);

}  // namespace bargmann
