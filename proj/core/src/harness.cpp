// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#include "bargmann/harness.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "bargmann/direct.hpp"
#include "bargmann/error.hpp"
#include "bargmann/gabor.hpp"
#include "bargmann/gyrator.hpp"
#include "bargmann/hermite.hpp"
#include "bargmann/nslct.hpp"

namespace bargmann {

namespace {

using Index = Eigen::Index;

Field forward_with(Method method, const Signal& signal, const HgBasis* basis) {
  switch (method) {
    case Method::direct: return forward_direct(signal, direct_default_grid(signal.grid));
    case Method::gabor: return forward_gabor(signal);
    case Method::hg: return forward_hg(signal, *basis);
    case Method::gyrator: return forward_gyrator(signal);
    case Method::nslct: return forward_nslct(signal);
  }
  throw ArgumentError("unknown method");
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::direct: return "direct";
    case Method::gabor: return "gabor";
    case Method::hg: return "hg";
    case Method::gyrator: return "gyrator";
    case Method::nslct: return "nslct";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  throw ArgumentError("unknown method '" + std::string(name) +
                      "' (expected direct, gabor, hg, gyrator or nslct)");
}

FieldGrid default_output_grid(Method method, const SampleGrid& signal_grid) {
  switch (method) {
    case Method::direct:
    case Method::gabor: return gabor_output_grid(signal_grid);
    case Method::hg:
    case Method::gyrator:
    case Method::nslct: return FieldGrid{signal_grid, signal_grid};
  }
  throw ArgumentError("unknown method");
}

Field forward_transform(Method method, const Signal& signal) {
  if (method == Method::hg) {
    const HgBasis basis = build_hg_basis(signal.grid);
    return forward_hg(signal, basis);
  }
  return forward_with(method, signal, nullptr);
}

Signal inverse_transform(Method method, const Field& field, GaborInverse variant,
                         const std::optional<SampleGrid>& out) {
  switch (method) {
    case Method::direct:
      return inverse_direct(field, out ? *out : direct_default_signal_grid(field.grid));
    case Method::gabor:
      if (variant == GaborInverse::single_sum) return inverse_gabor_1d(field);
      return inverse_gabor_2d(field, out ? *out : gabor_2d_signal_grid(field.grid));
    case Method::hg: return inverse_hg(field, build_hg_basis(field.grid.x));
    case Method::gyrator: return inverse_gyrator(field);
    case Method::nslct: return inverse_nslct(field);
  }
  throw ArgumentError("unknown method");
}

std::vector<SweepRow> accuracy_sweep(const std::vector<Method>& methods, int first, int last,
                                     std::size_t n, double delta) {
  if (first < 0 || first > last || static_cast<std::size_t>(last) >= n) {
    std::ostringstream msg;
    msg << "accuracy_sweep: orders must satisfy 0 <= first <= last < " << n << " (got "
        << first << ":" << last << ")";
    throw ArgumentError(msg.str());
  }
  const SampleGrid grid(n, delta);
  std::optional<HgBasis> basis;
  for (Method m : methods) {
    if (m == Method::hg) basis = build_hg_basis(grid);
  }

  std::vector<SweepRow> rows;
  rows.reserve(methods.size() * static_cast<std::size_t>(last - first + 1));
  for (Method m : methods) {
    const FieldGrid out = default_output_grid(m, grid);
    for (int order = first; order <= last; ++order) {
      const Signal s = sample_hg(order, grid);
      const Field f = forward_with(m, s, basis ? &*basis : nullptr);
      rows.push_back(SweepRow{m, order, nmse(sample_lg0(order, out), f).nmse});
    }
  }
  return rows;
}

Metric roundtrip_nmse(Method method, const Signal& signal, GaborInverse variant) {
  Field field = [&] {
    if (method == Method::hg) return forward_hg(signal, build_hg_basis(signal.grid));
    return forward_with(method, signal, nullptr);
  }();
  const Signal back = inverse_transform(method, field, variant, signal.grid);
  return nmse(signal, back);
}

std::uint64_t predicted_real_mults(Method method, std::uint64_t n) {
  if (n < 2) {
    throw ArgumentError("predicted_real_mults requires n >= 2 (got " + std::to_string(n) + ")");
  }
  const std::uint64_t n2 = n * n;
  const std::uint64_t n3 = n2 * n;
  const bool exact = std::has_single_bit(n);
  // n^2 log2(n) times `k`, exact for powers of two.
  auto n2_log = [&](std::uint64_t k) -> std::uint64_t {
    if (exact) return k * n2 * static_cast<std::uint64_t>(std::countr_zero(n));
    return static_cast<std::uint64_t>(
        std::llround(static_cast<double>(k) * static_cast<double>(n2) *
                     std::log2(static_cast<double>(n))));
  };
  switch (method) {
    case Method::direct: return 4 * n3;
    case Method::gabor: return n2_log(2) + 6 * n2;
    case Method::hg: return 3 * n3 + 5 * n2 + 2 * n;
    case Method::gyrator: return n2_log(8) + 14 * n2;
    case Method::nslct: return n2_log(8) + 12 * n2;
  }
  throw ArgumentError("unknown method");
}

Metric interior_nmse(const Field& reference, const Field& test, std::size_t margin) {
  const Index rows = reference.values.rows() - 2 * static_cast<Index>(margin);
  const Index cols = reference.values.cols() - 2 * static_cast<Index>(margin);
  if (rows <= 0 || cols <= 0 || reference.values.rows() != test.values.rows() ||
      reference.values.cols() != test.values.cols()) {
    throw ArgumentError("interior_nmse: incompatible shapes or margin too large");
  }
  const auto m = static_cast<Index>(margin);
  return nmse(reference.values.block(m, m, rows, cols), test.values.block(m, m, rows, cols));
}

MethodComparison compare_methods(const Signal& signal) {
  const SampleGrid& g = signal.grid;
  const FieldGrid delta_grid{g, g};
  std::vector<Field> fields;
  fields.push_back(forward_direct(signal, gabor_output_grid(g)));
  fields.push_back(forward_gabor(signal));
  fields.push_back(forward_direct(signal, delta_grid));
  fields.push_back(forward_hg(signal, build_hg_basis(g)));
  fields.push_back(forward_gyrator(signal));
  fields.push_back(forward_nslct(signal));

  MethodComparison result;
  result.labels = {"direct@gabor", "gabor", "direct", "hg", "gyrator", "nslct"};
  const auto k = static_cast<Index>(fields.size());
  result.nmse = Eigen::MatrixXd::Zero(k, k);
  const auto margin = static_cast<std::size_t>(std::ceil(0.05 * static_cast<double>(g.count())));
  for (Index i = 0; i < k; ++i) {
    for (Index j = i + 1; j < k; ++j) {
      const Field& a = fields[static_cast<std::size_t>(i)];
      const Field& b = fields[static_cast<std::size_t>(j)];
      double v = std::numeric_limits<double>::quiet_NaN();
      if (same_grid(a.grid.x, b.grid.x) && same_grid(a.grid.y, b.grid.y)) {
        v = interior_nmse(a, b, margin).nmse.value_or(std::numeric_limits<double>::quiet_NaN());
      }
      result.nmse(i, j) = v;
      result.nmse(j, i) = v;
    }
  }
  return result;
}

}  // namespace bargmann
