// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

// Method dispatch and the benchmark protocols: accuracy sweep against the
// analytic LG functions, round-trip error, predicted multiplication counts
// and pairwise cross-method agreement.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "bargmann/signal.hpp"

namespace bargmann {

enum class Method { direct, gabor, hg, gyrator, nslct };

inline constexpr Method kAllMethods[] = {Method::direct, Method::gabor, Method::hg,
                                         Method::gyrator, Method::nslct};

std::string_view to_string(Method method);
/// Throws ArgumentError for an unknown name.
Method parse_method(std::string_view name);

/// The two inversion routes of the Gabor method.
enum class GaborInverse { double_sum, single_sum };

/// Output grid of `forward_transform` for a signal grid. direct and gabor use
/// (dt/sqrt2, dw/sqrt2); hg, gyrator and nslct use (dt, dt).
FieldGrid default_output_grid(Method method, const SampleGrid& signal_grid);

/// Forward transform with the method's default output grid.
Field forward_transform(Method method, const Signal& signal);

/// Inverse transform onto the method's natural time grid. For direct the
/// time grid is (Nx, sqrt2 dx) unless `out` is given; for gabor the double
/// sum accepts an explicit `out` subject to its spacing constraint.
Signal inverse_transform(Method method, const Field& field,
                         GaborInverse variant = GaborInverse::double_sum,
                         const std::optional<SampleGrid>& out = std::nullopt);

struct SweepRow {
  Method method;
  int order;
  std::optional<double> nmse;
};

/// For each method (outer) and order in [first, last] (inner): forward
/// transform of sample_hg(order) on the grid (n, delta) against
/// sample_lg0(order) on the method's output grid. Throws ArgumentError
/// unless 0 <= first <= last < n.
std::vector<SweepRow> accuracy_sweep(const std::vector<Method>& methods, int first, int last,
                                     std::size_t n, double delta);

/// nmse(signal, inverse(forward(signal))).
Metric roundtrip_nmse(Method method, const Signal& signal,
                      GaborInverse variant = GaborInverse::double_sum);

/// Real multiplications predicted for an N-sample input:
/// direct 4N^3, gabor 2N^2 log2 N + 6N^2, hg 3N^3 + 5N^2 + 2N,
/// gyrator 8N^2 log2 N + 14N^2, nslct 8N^2 log2 N + 12N^2.
/// Exact for powers of two, rounded to nearest otherwise. Throws
/// ArgumentError for n < 2.
std::uint64_t predicted_real_mults(Method method, std::uint64_t n);

struct MethodComparison {
  /// direct@gabor, gabor, direct, hg, gyrator, nslct.
  std::vector<std::string> labels;
  /// Symmetric; entry (i, j) is the interior NMSE with the lower-index method
  /// as reference. NaN when the two outputs live on different grids.
  Eigen::MatrixXd nmse;
};

/// Pairwise agreement over interior cells (outer ceil(5% N) ring dropped on
/// every side). direct@gabor and gabor share the Gabor grid; direct, hg,
/// gyrator and nslct share the (dt, dt) grid.
MethodComparison compare_methods(const Signal& signal);

/// Interior NMSE of two equally shaped fields, dropping `margin` cells per side.
Metric interior_nmse(const Field& reference, const Field& test, std::size_t margin);

}  // namespace bargmann
