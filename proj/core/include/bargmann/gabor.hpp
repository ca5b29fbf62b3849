// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

// Forward transform through the Gaussian-window Gabor transform, and the two
// inversion routes (double sum with a centered DFT, and a single sum).

#pragma once

#include "bargmann/signal.hpp"

namespace bargmann {

/// Grid of the Gabor transform: dtau = dt, dw = 2pi/(N dt), N x N.
FieldGrid gabor_transform_grid(const SampleGrid& signal_grid);

/// Grid of forward_gabor: the Gabor grid scaled by 1/sqrt2 on both axes.
FieldGrid gabor_output_grid(const SampleGrid& signal_grid);

/// G(tau_p, w_q) = (2pi)^(-1/2) dt sum_n s[n] exp(-(tau_p - t_n)^2/2) exp(-j w_q t_n).
Field gabor_transform(const Signal& signal);

/// S(x, y) = sqrt2 pi^(-1/4) exp(-jxy) G(sqrt2 x, -sqrt2 y).
Field forward_gabor(const Signal& signal);

/// Double-sum inverse. `out` must have Ny samples with
/// out.spacing * sqrt2 * dy == 2pi / Ny; otherwise GridConstraintError.
Signal inverse_gabor_2d(const Field& field, const SampleGrid& out);

/// The time grid accepted by inverse_gabor_2d for this field.
SampleGrid gabor_2d_signal_grid(const FieldGrid& grid);

/// Single-sum inverse s(sqrt2 x_p) = 2^(-1/2) pi^(-1/4) dy sum_q S[p,q] exp(-j x_p y_q).
/// The result lives on the grid (Nx, sqrt2 dx).
Signal inverse_gabor_1d(const Field& field);

}  // namespace bargmann
