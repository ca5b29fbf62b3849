// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

// Transform by Gaussian embedding followed by a discrete gyrator transform
// computed as chirp multiply / chirp convolution / chirp multiply.

#pragma once

#include "bargmann/signal.hpp"

namespace bargmann {

struct GyratorAngle {
  double radians = 0.0;
};

/// field[p, q] = s[p] exp(-tau_q^2 / 2); the x axis is the signal grid.
Field embed_gaussian(const Signal& signal, const SampleGrid& tau_grid);

/// Discrete gyrator transform at `angle`. When |sin(angle)| < 1e-12 the
/// closed form is used: identity for cos > 0, point reflection otherwise.
Field gyrator_apply(const Field& field, GyratorAngle angle);

/// S = pi^(-1/4) G_{-pi/4}{ s(t) exp(-tau^2/2) } on dx = dy = dt.
Field forward_gyrator(const Signal& signal);

/// s(t) = pi^(1/4) G_{pi/4}{S}(t, 0). The final chirp stage is evaluated on
/// the tau = 0 line only. Requires a square field with dx == dy
/// (GridConstraintError otherwise).
Signal inverse_gyrator(const Field& field);

}  // namespace bargmann
