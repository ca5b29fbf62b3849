// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

// Core data types: centered sampling grids, 1D signals, 2D phase-space
// fields, error metrics, and the analytic Hermite-Gaussian and
// Laguerre-Gaussian evaluators used as ground truth.

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

namespace bargmann {

using Complex = std::complex<double>;

/// Uniform grid of odd length centered on zero. Sample i sits at
/// (i - (count-1)/2) * spacing, so index (count-1)/2 is exactly t = 0.
class SampleGrid {
 public:
  /// Throws ArgumentError for even or zero count, or non-finite or
  /// nonpositive spacing.
  SampleGrid(std::size_t count, double spacing);

  std::size_t count() const { return count_; }
  double spacing() const { return spacing_; }
  /// (count-1)/2: array index of the origin and largest centered index.
  std::ptrdiff_t half() const { return static_cast<std::ptrdiff_t>(count_ / 2); }
  std::ptrdiff_t centered_index(std::size_t i) const {
    return static_cast<std::ptrdiff_t>(i) - half();
  }
  double position(std::size_t i) const {
    return static_cast<double>(centered_index(i)) * spacing_;
  }
  Eigen::VectorXd positions() const;

  bool operator==(const SampleGrid&) const = default;

 private:
  std::size_t count_;
  double spacing_;
};

SampleGrid make_centered_grid(std::size_t count, double spacing);

/// True when both grids have the same count and spacings agree to
/// `rel_tol` relative.
bool same_grid(const SampleGrid& a, const SampleGrid& b, double rel_tol = 1e-12);

struct Signal {
  SampleGrid grid;
  Eigen::VectorXcd samples;

  /// Zero signal on `grid`.
  explicit Signal(SampleGrid grid);
  /// Throws ArgumentError if samples.size() != grid.count().
  Signal(SampleGrid grid, Eigen::VectorXcd samples);
};

struct FieldGrid {
  SampleGrid x;
  SampleGrid y;

  bool operator==(const FieldGrid&) const = default;
};

enum class FieldKind { normalized, unnormalized, gabor };

std::string_view to_string(FieldKind kind);
/// Throws ArgumentError for an unknown name.
FieldKind parse_field_kind(std::string_view name);

/// values(p, q) holds the sample at (x_p, y_q): rows follow the x axis,
/// columns the y axis.
struct Field {
  FieldGrid grid;
  Eigen::MatrixXcd values;
  FieldKind kind = FieldKind::normalized;

  Field(FieldGrid grid, FieldKind kind);
  Field(FieldGrid grid, Eigen::MatrixXcd values, FieldKind kind);
};

struct Metric {
  /// Normalized mean-square error; empty when the reference has zero energy.
  std::optional<double> nmse;
  double mse = 0.0;
};

/// sum|ref - test|^2 / sum|ref|^2 and sum|ref - test|^2 / count.
/// Throws ArgumentError on shape mismatch.
Metric nmse(const Eigen::Ref<const Eigen::MatrixXcd>& reference,
            const Eigen::Ref<const Eigen::MatrixXcd>& test);
Metric nmse(const Signal& reference, const Signal& test);
Metric nmse(const Field& reference, const Field& test);

/// Energy-weighted sums: spacing * sum|s|^2 and dx * dy * sum|S|^2.
double energy(const Signal& s);
double energy(const Field& f);

/// Hermite-Gaussian function of order n at a single point, via the
/// Gaussian-weighted three-term recurrence.
double hermite_gaussian(int order, double t);

/// Samples HG_order on `grid`. Throws NumericalError naming the order when
/// the recurrence underflows inside the oscillatory region or overflows.
Signal sample_hg(int order, const SampleGrid& grid);

/// Samples LG_{0,order}(x, y) = (pi n!)^(-1/2) (x + jy)^n e^(-(x^2+y^2)/2),
/// evaluated in log-magnitude/phase form.
Field sample_lg0(int order, const FieldGrid& grid);

/// Deterministic reference signal: a Gaussian-enveloped sinusoidal FM
/// component plus HG_6(t - 4) and HG_3(t + 5).
Signal make_test_signal(const SampleGrid& grid);

}  // namespace bargmann
