// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#include "bargmann/gabor.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "bargmann/error.hpp"
#include "bargmann/spectral.hpp"
#include "fft.hpp"

namespace bargmann {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr Complex kJ{0.0, 1.0};

using Index = Eigen::Index;

void require_normalized(const Field& field, const char* what) {
  if (field.kind != FieldKind::normalized) {
    throw ArgumentError(std::string(what) + " requires a normalized field, got " +
                        std::string(to_string(field.kind)));
  }
}

}  // namespace

FieldGrid gabor_transform_grid(const SampleGrid& signal_grid) {
  return FieldGrid{signal_grid,
                   SampleGrid(signal_grid.count(), dual_spacing(signal_grid))};
}

FieldGrid gabor_output_grid(const SampleGrid& signal_grid) {
  const FieldGrid g = gabor_transform_grid(signal_grid);
  return FieldGrid{SampleGrid(g.x.count(), g.x.spacing() / kSqrt2),
                   SampleGrid(g.y.count(), g.y.spacing() / kSqrt2)};
}

Field gabor_transform(const Signal& signal) {
  const SampleGrid& t = signal.grid;
  const auto n = static_cast<Index>(t.count());
  // Row p holds the windowed signal for window position tau_p = t_p.
  Eigen::MatrixXcd w(n, n);
  for (Index p = 0; p < n; ++p) {
    const double tau = t.position(static_cast<std::size_t>(p));
    for (Index k = 0; k < n; ++k) {
      const double d = tau - t.position(static_cast<std::size_t>(k));
      w(p, k) = signal.samples(k) * std::exp(-0.5 * d * d);
    }
  }
  detail::centered_fft_rows(w, detail::FftSign::negative);
  w *= t.spacing() / std::sqrt(2.0 * kPi);
  return Field(gabor_transform_grid(t), std::move(w), FieldKind::gabor);
}

Field forward_gabor(const Signal& signal) {
  const Field g = gabor_transform(signal);
  const FieldGrid out = gabor_output_grid(signal.grid);
  const auto n = static_cast<Index>(signal.grid.count());
  const double scale = kSqrt2 * std::pow(kPi, -0.25);
  Field field(out, FieldKind::normalized);
  for (Index p = 0; p < n; ++p) {
    const double x = out.x.position(static_cast<std::size_t>(p));
    for (Index q = 0; q < n; ++q) {
      const double y = out.y.position(static_cast<std::size_t>(q));
      // y -> -sqrt2 y is the centered index q -> -q.
      field.values(p, q) = scale * std::exp(-kJ * (x * y)) * g.values(p, n - 1 - q);
    }
  }
  return field;
}

SampleGrid gabor_2d_signal_grid(const FieldGrid& grid) {
  const SampleGrid in(grid.y.count(), kSqrt2 * grid.y.spacing());
  return SampleGrid(grid.y.count(), dual_spacing(in));
}

Signal inverse_gabor_2d(const Field& field, const SampleGrid& out) {
  require_normalized(field, "inverse_gabor_2d");
  const FieldGrid& g = field.grid;
  if (out.count() != g.y.count()) {
    std::ostringstream msg;
    msg << "inverse_gabor_2d: output length must equal Ny = " << g.y.count()
        << " (got " << out.count() << ")";
    throw GridConstraintError(msg.str());
  }
  const auto nx = static_cast<Index>(g.x.count());
  const auto ny = static_cast<Index>(g.y.count());

  Eigen::VectorXcd col = Eigen::VectorXcd::Zero(ny);
  for (Index q = 0; q < ny; ++q) {
    const double y = g.y.position(static_cast<std::size_t>(q));
    Complex acc = 0.0;
    for (Index p = 0; p < nx; ++p) {
      const double x = g.x.position(static_cast<std::size_t>(p));
      acc += field.values(p, q) * std::exp(kJ * (x * y));
    }
    col(q) = g.x.spacing() * acc;
  }

  // sum_q dy col[q] exp(-j (sqrt2 y_q) t_m) is a forward centered DFT with
  // input spacing sqrt2 dy; centered_dft_1d supplies the factor sqrt2 dy.
  const Signal spectrum(SampleGrid(g.y.count(), kSqrt2 * g.y.spacing()), std::move(col));
  Signal s = centered_dft_1d(spectrum, Direction::forward, out.spacing());
  s.samples *= 0.5 * std::pow(kPi, -0.75);
  s.grid = out;
  return s;
}

Signal inverse_gabor_1d(const Field& field) {
  require_normalized(field, "inverse_gabor_1d");
  const FieldGrid& g = field.grid;
  const auto nx = static_cast<Index>(g.x.count());
  const auto ny = static_cast<Index>(g.y.count());
  const double scale = std::pow(kPi, -0.25) * g.y.spacing() / kSqrt2;
  Signal s(SampleGrid(g.x.count(), kSqrt2 * g.x.spacing()));
  for (Index p = 0; p < nx; ++p) {
    const double x = g.x.position(static_cast<std::size_t>(p));
    Complex acc = 0.0;
    for (Index q = 0; q < ny; ++q) {
      const double y = g.y.position(static_cast<std::size_t>(q));
      acc += field.values(p, q) * std::exp(-kJ * (x * y));
    }
    s.samples(p) = scale * acc;
  }
  return s;
}

}  // namespace bargmann
