// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#include "bargmann/spectral.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bargmann/error.hpp"
#include "fft.hpp"

namespace bargmann {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr Complex kJ{0.0, 1.0};

void require_dual(const SampleGrid& in, double output_spacing) {
  const double required = dual_spacing(in);
  if (!(std::abs(output_spacing - required) <= 1e-12 * required)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "centered DFT spacing constraint violated: output spacing "
        << output_spacing << " but N * d_in * d_out = 2pi requires " << required;
    throw GridConstraintError(msg.str());
  }
}

}  // namespace

double dual_spacing(const SampleGrid& grid) {
  return kTwoPi / (static_cast<double>(grid.count()) * grid.spacing());
}

Signal centered_dft_1d(const Signal& signal, Direction direction,
                       double output_spacing) {
  require_dual(signal.grid, output_spacing);
  Eigen::VectorXcd v = signal.samples;
  const double d_in = signal.grid.spacing();
  if (direction == Direction::forward) {
    detail::centered_fft(v, detail::FftSign::negative);
    v *= d_in;
  } else {
    detail::centered_fft(v, detail::FftSign::positive);
    v *= d_in / kTwoPi;
  }
  return Signal(SampleGrid(signal.grid.count(), output_spacing), std::move(v));
}

Field centered_dft_2d(const Field& field, Direction direction) {
  Eigen::MatrixXcd v = field.values;
  const double dx = field.grid.x.spacing();
  const double dy = field.grid.y.spacing();
  if (direction == Direction::forward) {
    detail::centered_fft_columns(v, detail::FftSign::negative);
    detail::centered_fft_rows(v, detail::FftSign::negative);
    v *= dx * dy;
  } else {
    detail::centered_fft_columns(v, detail::FftSign::positive);
    detail::centered_fft_rows(v, detail::FftSign::positive);
    v *= dx * dy / (kTwoPi * kTwoPi);
  }
  FieldGrid out{SampleGrid(field.grid.x.count(), dual_spacing(field.grid.x)),
                SampleGrid(field.grid.y.count(), dual_spacing(field.grid.y))};
  return Field(out, std::move(v), field.kind);
}

ChirpMatrix2::ChirpMatrix2(const Eigen::Matrix2cd& entries) : entries_(entries) {
  const double scale = 1.0 + entries.cwiseAbs().maxCoeff();
  if (std::abs(entries(0, 1) - entries(1, 0)) > kTolerance * scale) {
    throw ArgumentError("chirp matrix must be symmetric");
  }
  entries_(1, 0) = entries_(0, 1);
  // Im(C) is a real symmetric 2x2 matrix: PSD iff diagonal and determinant
  // are nonnegative.
  const double a = entries_(0, 0).imag();
  const double b = entries_(0, 1).imag();
  const double d = entries_(1, 1).imag();
  const double tol = kTolerance * scale;
  decays_ = a >= -tol && d >= -tol && a * d - b * b >= -tol * scale;
}

Field chirp_multiply_2d(const Field& field, const ChirpMatrix2& c) {
  if (!c.decays()) {
    throw ArgumentError(
        "chirp multiplication with a growing Gaussian envelope is not "
        "supported over the full plane");
  }
  const Eigen::Matrix2cd& m = c.entries();
  Field out = field;
  for (std::size_t p = 0; p < field.grid.x.count(); ++p) {
    const double x = field.grid.x.position(p);
    for (std::size_t q = 0; q < field.grid.y.count(); ++q) {
      const double y = field.grid.y.position(q);
      const Complex phase =
          0.5 * (m(0, 0) * x * x + 2.0 * m(0, 1) * x * y + m(1, 1) * y * y);
      out.values(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) *=
          std::exp(kJ * phase);
    }
  }
  return out;
}

Signal chirp_multiply_x_axis(const Field& field, const ChirpMatrix2& c) {
  if (!c.decays_on_x_axis()) {
    throw ArgumentError("chirp grows along the x axis");
  }
  const auto origin = static_cast<Eigen::Index>(field.grid.y.half());
  Signal out(field.grid.x, field.values.col(origin));
  const Complex c00 = c.entries()(0, 0);
  for (std::size_t p = 0; p < field.grid.x.count(); ++p) {
    const double x = field.grid.x.position(p);
    out.samples(static_cast<Eigen::Index>(p)) *= std::exp(kJ * 0.5 * c00 * x * x);
  }
  return out;
}

Field chirp_convolve_2d(const Field& field, const Eigen::Matrix2cd& b) {
  const double scale = b.cwiseAbs().maxCoeff();
  if (std::abs(b(0, 1) - b(1, 0)) > ChirpMatrix2::kTolerance * (1.0 + scale)) {
    throw ArgumentError("chirp convolution matrix must be symmetric");
  }
  const Complex det = b.determinant();
  if (scale == 0.0 || std::abs(det) <= 1e-14 * scale * scale) {
    throw ArgumentError(
        "chirp convolution requires a nonsingular B; use the B = 0 branch of "
        "the NsLCT instead");
  }
  // Fourier image of (2pi sqrt(-det B))^-1 exp((j/2) u^T B^-1 u) is
  // kappa * exp(-(j/2) w^T B w) with kappa = 1 / (sqrt(-det B) sqrt(-1/det B)),
  // principal roots; kappa is +-1.
  const Complex kappa = 1.0 / (std::sqrt(-det) * std::sqrt(-1.0 / det));

  Field spectrum = centered_dft_2d(field, Direction::forward);
  for (std::size_t p = 0; p < spectrum.grid.x.count(); ++p) {
    const double wx = spectrum.grid.x.position(p);
    for (std::size_t q = 0; q < spectrum.grid.y.count(); ++q) {
      const double wy = spectrum.grid.y.position(q);
      const Complex quad =
          b(0, 0) * wx * wx + 2.0 * b(0, 1) * wx * wy + b(1, 1) * wy * wy;
      spectrum.values(static_cast<Eigen::Index>(p),
                      static_cast<Eigen::Index>(q)) *=
          kappa * std::exp(-0.5 * kJ * quad);
    }
  }
  Field out = centered_dft_2d(spectrum, Direction::inverse);
  // The inverse lands on the dual of the dual grid; restore the exact input
  // spacings.
  out.grid = field.grid;
  return out;
}

}  // namespace bargmann
