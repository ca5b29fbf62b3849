// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#include "bargmann/direct.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>

#include "bargmann/error.hpp"

namespace bargmann {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr Complex kJ{0.0, 1.0};

using Index = Eigen::Index;

// A[p, n] = exp(-(x_p - t_n/sqrt2)^2). Together with B[q, n] and exp(-jxy)
// this is the full kernel, since -x^2 + sqrt2 x t - t^2/2 = -(x - t/sqrt2)^2.
Eigen::MatrixXd gaussian_factor(const SampleGrid& x, const SampleGrid& t) {
  Eigen::MatrixXd a(static_cast<Index>(x.count()), static_cast<Index>(t.count()));
  for (std::size_t p = 0; p < x.count(); ++p) {
    for (std::size_t n = 0; n < t.count(); ++n) {
      const double d = x.position(p) - t.position(n) / kSqrt2;
      a(static_cast<Index>(p), static_cast<Index>(n)) = std::exp(-d * d);
    }
  }
  return a;
}

// B[q, n] = exp(j sqrt2 y_q t_n).
Eigen::MatrixXcd oscillating_factor(const SampleGrid& y, const SampleGrid& t) {
  Eigen::MatrixXcd b(static_cast<Index>(y.count()), static_cast<Index>(t.count()));
  for (std::size_t q = 0; q < y.count(); ++q) {
    for (std::size_t n = 0; n < t.count(); ++n) {
      b(static_cast<Index>(q), static_cast<Index>(n)) =
          std::exp(kJ * (kSqrt2 * y.position(q) * t.position(n)));
    }
  }
  return b;
}

void require_normalized(const Field& field, const char* what) {
  if (field.kind != FieldKind::normalized) {
    throw ArgumentError(std::string(what) + " requires a normalized field, got " +
                        std::string(to_string(field.kind)));
  }
}

}  // namespace

Field forward_direct(const Signal& signal, const FieldGrid& out) {
  const SampleGrid& t = signal.grid;
  const Eigen::MatrixXd a = gaussian_factor(out.x, t);
  const Eigen::MatrixXcd b = oscillating_factor(out.y, t);
  const double scale = std::pow(kPi, -0.75) * t.spacing();
  const auto nx = static_cast<Index>(out.x.count());
  const auto ny = static_cast<Index>(out.y.count());
  const auto nt = static_cast<Index>(t.count());

  Field field(out, FieldKind::normalized);
  Eigen::VectorXcd weighted(nt);
  for (Index p = 0; p < nx; ++p) {
    for (Index n = 0; n < nt; ++n) weighted(n) = a(p, n) * signal.samples(n);
    const double x = out.x.position(static_cast<std::size_t>(p));
    for (Index q = 0; q < ny; ++q) {
      Complex acc = 0.0;
      for (Index n = 0; n < nt; ++n) acc += weighted(n) * b(q, n);
      const double y = out.y.position(static_cast<std::size_t>(q));
      field.values(p, q) = scale * std::exp(-kJ * (x * y)) * acc;
    }
  }
  return field;
}

Signal inverse_direct(const Field& field, const SampleGrid& out) {
  require_normalized(field, "inverse_direct");
  const FieldGrid& g = field.grid;
  const Eigen::MatrixXd a = gaussian_factor(g.x, out);
  const Eigen::MatrixXcd b = oscillating_factor(g.y, out);
  const auto nx = static_cast<Index>(g.x.count());
  const auto ny = static_cast<Index>(g.y.count());
  const auto nt = static_cast<Index>(out.count());

  Eigen::MatrixXcd phased(nx, ny);
  for (Index p = 0; p < nx; ++p) {
    const double x = g.x.position(static_cast<std::size_t>(p));
    for (Index q = 0; q < ny; ++q) {
      const double y = g.y.position(static_cast<std::size_t>(q));
      phased(p, q) = field.values(p, q) * std::exp(kJ * (x * y));
    }
  }

  const double scale = std::pow(kPi, -0.75) * g.x.spacing() * g.y.spacing();
  Signal signal(out);
  for (Index n = 0; n < nt; ++n) {
    Complex outer = 0.0;
    for (Index p = 0; p < nx; ++p) {
      Complex inner = 0.0;
      for (Index q = 0; q < ny; ++q) inner += phased(p, q) * std::conj(b(q, n));
      outer += a(p, n) * inner;
    }
    signal.samples(n) = scale * outer;
  }
  return signal;
}

FieldGrid direct_default_grid(const SampleGrid& signal_grid) {
  const std::size_t n = signal_grid.count();
  const double dt = signal_grid.spacing();
  const double dw = 2.0 * kPi / (static_cast<double>(n) * dt);
  return FieldGrid{SampleGrid(n, dt / kSqrt2), SampleGrid(n, dw / kSqrt2)};
}

SampleGrid direct_default_signal_grid(const FieldGrid& field_grid) {
  return SampleGrid(field_grid.x.count(), kSqrt2 * field_grid.x.spacing());
}

Field to_unnormalized(const Field& field, std::vector<Cell>* saturated) {
  require_normalized(field, "to_unnormalized");
  const double log_scale = -0.25 * std::log(2.0) + 0.25 * std::log(kPi);
  const double log_max = std::log(DBL_MAX);
  Field out(field.grid, FieldKind::unnormalized);
  for (std::size_t p = 0; p < field.grid.x.count(); ++p) {
    const double x = field.grid.x.position(p);
    for (std::size_t q = 0; q < field.grid.y.count(); ++q) {
      const double y = field.grid.y.position(q);
      const auto ip = static_cast<Index>(p);
      const auto iq = static_cast<Index>(q);
      const Complex v = field.values(ip, iq);
      const double mag = std::abs(v);
      if (mag == 0.0) {
        out.values(ip, iq) = 0.0;
        continue;
      }
      const double log_mag = log_scale + 0.5 * (x * x + y * y) + std::log(mag);
      if (log_mag >= log_max) {
        out.values(ip, iq) = std::polar(DBL_MAX, std::arg(v));
        if (saturated != nullptr) saturated->push_back(Cell{p, q});
      } else {
        out.values(ip, iq) = std::polar(std::exp(log_mag), std::arg(v));
      }
    }
  }
  return out;
}

}  // namespace bargmann
