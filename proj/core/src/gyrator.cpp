// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#include "bargmann/gyrator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "bargmann/error.hpp"
#include "bargmann/spectral.hpp"

namespace bargmann {

namespace {

constexpr double kPi = std::numbers::pi;

using Index = Eigen::Index;

Eigen::Matrix2cd antidiag(double v) {
  Eigen::Matrix2cd m;
  m << 0.0, v, v, 0.0;
  return m;
}

// CM(c) then CC(b); the caller applies the final CM(c).
Field chirp_front(const Field& field, const ChirpMatrix2& c, double sin_a) {
  return chirp_convolve_2d(chirp_multiply_2d(field, c), antidiag(sin_a));
}

ChirpMatrix2 gyrator_chirp(double alpha) {
  return ChirpMatrix2(antidiag((std::cos(alpha) - 1.0) / std::sin(alpha)));
}

}  // namespace

Field embed_gaussian(const Signal& signal, const SampleGrid& tau_grid) {
  Field field(FieldGrid{signal.grid, tau_grid}, FieldKind::normalized);
  for (std::size_t q = 0; q < tau_grid.count(); ++q) {
    const double tau = tau_grid.position(q);
    field.values.col(static_cast<Index>(q)) = signal.samples * std::exp(-0.5 * tau * tau);
  }
  return field;
}

Field gyrator_apply(const Field& field, GyratorAngle angle) {
  const double a = angle.radians;
  const double s = std::sin(a);
  if (std::abs(s) < 1e-12) {
    if (std::cos(a) > 0.0) return field;
    Field out = field;
    out.values = field.values.reverse();
    return out;
  }
  const ChirpMatrix2 c = gyrator_chirp(a);
  return chirp_multiply_2d(chirp_front(field, c, s), c);
}

Field forward_gyrator(const Signal& signal) {
  Field out = gyrator_apply(embed_gaussian(signal, signal.grid), GyratorAngle{-kPi / 4.0});
  out.values *= std::pow(kPi, -0.25);
  out.kind = FieldKind::normalized;
  return out;
}

Signal inverse_gyrator(const Field& field) {
  if (field.kind != FieldKind::normalized) {
    throw ArgumentError("inverse_gyrator requires a normalized field, got " +
                        std::string(to_string(field.kind)));
  }
  const FieldGrid& g = field.grid;
  if (g.x.count() != g.y.count() || !same_grid(g.x, g.y)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "inverse_gyrator requires a square field with dx == dy; got "
        << g.x.count() << "x" << g.y.count() << " with dx=" << g.x.spacing()
        << ", dy=" << g.y.spacing() << " (required dy=" << g.x.spacing() << ")";
    throw GridConstraintError(msg.str());
  }
  const double a = kPi / 4.0;
  const ChirpMatrix2 c = gyrator_chirp(a);
  Signal s = chirp_multiply_x_axis(chirp_front(field, c, std::sin(a)), c);
  s.samples *= std::pow(kPi, 0.25);
  return s;
}

}  // namespace bargmann
