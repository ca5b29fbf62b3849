// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

// Independent reference computations shared by the unit and acceptance
// tests. Nothing here calls the transform code under test.

#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "bargmann/signal.hpp"

namespace bargmann::testing {

/// Convolution of the Gaussian exp(-(x^2 + y^2)/2) with the chirp kernel
/// (2pi |beta|)^-1 exp(j u1 u2 / beta), i.e. B = antidiag(beta, beta), by
/// midpoint quadrature with `points` nodes per axis on [-half_width,
/// half_width]^2, evaluated on `grid`.
Field chirp_convolution_quadrature(const FieldGrid& grid, double beta, int points,
                                   double half_width);

/// Physicists' Hermite polynomial by explicit coefficients (small n only)
/// times the HG normalization.
double hermite_gaussian_polynomial(int n, double t);

/// Number of sign changes of v, ignoring entries with |v| <= threshold.
int sign_changes(const Eigen::VectorXd& v, double threshold);

/// binom(n, k) in double precision by the multiplicative formula.
double binomial(int n, int k);

/// Random complex vector with i.i.d. normal parts from a fixed-seed engine.
Eigen::VectorXcd random_complex(Eigen::Index n, std::mt19937_64& rng);

/// Overlap <LG_{0,n}, HG_k(x) HG_{n-k}(y)> by quadrature of the closed forms
/// on a square grid.
Complex lg_hg_overlap(int n, int k, const SampleGrid& grid);

}  // namespace bargmann::testing
