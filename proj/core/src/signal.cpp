// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#include "bargmann/signal.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "bargmann/error.hpp"

namespace bargmann {

namespace {

constexpr double kPi = std::numbers::pi;

void require_same_shape(Eigen::Index ar, Eigen::Index ac, Eigen::Index br,
                        Eigen::Index bc) {
  if (ar != br || ac != bc) {
    std::ostringstream msg;
    msg << "shape mismatch: " << ar << "x" << ac << " vs " << br << "x" << bc;
    throw ArgumentError(msg.str());
  }
}

}  // namespace

SampleGrid::SampleGrid(std::size_t count, double spacing)
    : count_(count), spacing_(spacing) {
  if (count == 0 || count % 2 == 0) {
    throw ArgumentError("odd length required (got " + std::to_string(count) +
                        ")");
  }
  if (!std::isfinite(spacing) || spacing <= 0.0) {
    throw ArgumentError("grid spacing must be finite and positive");
  }
}

Eigen::VectorXd SampleGrid::positions() const {
  Eigen::VectorXd out(static_cast<Eigen::Index>(count_));
  for (std::size_t i = 0; i < count_; ++i) {
    out(static_cast<Eigen::Index>(i)) = position(i);
  }
  return out;
}

SampleGrid make_centered_grid(std::size_t count, double spacing) {
  return SampleGrid(count, spacing);
}

bool same_grid(const SampleGrid& a, const SampleGrid& b, double rel_tol) {
  return a.count() == b.count() &&
         std::abs(a.spacing() - b.spacing()) <=
             rel_tol * std::max(a.spacing(), b.spacing());
}

Signal::Signal(SampleGrid g)
    : grid(g),
      samples(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(g.count()))) {}

Signal::Signal(SampleGrid g, Eigen::VectorXcd s)
    : grid(g), samples(std::move(s)) {
  if (samples.size() != static_cast<Eigen::Index>(grid.count())) {
    throw ArgumentError("signal length " + std::to_string(samples.size()) +
                        " does not match grid count " +
                        std::to_string(grid.count()));
  }
}

std::string_view to_string(FieldKind kind) {
  switch (kind) {
    case FieldKind::normalized:
      return "normalized";
    case FieldKind::unnormalized:
      return "unnormalized";
    case FieldKind::gabor:
      return "gabor";
  }
  return "normalized";
}

FieldKind parse_field_kind(std::string_view name) {
  if (name == "normalized") return FieldKind::normalized;
  if (name == "unnormalized") return FieldKind::unnormalized;
  if (name == "gabor") return FieldKind::gabor;
  throw ArgumentError("unknown field kind '" + std::string(name) + "'");
}

Field::Field(FieldGrid g, FieldKind k)
    : grid(g),
      values(Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(g.x.count()),
                                    static_cast<Eigen::Index>(g.y.count()))),
      kind(k) {}

Field::Field(FieldGrid g, Eigen::MatrixXcd v, FieldKind k)
    : grid(g), values(std::move(v)), kind(k) {
  require_same_shape(values.rows(), values.cols(),
                     static_cast<Eigen::Index>(grid.x.count()),
                     static_cast<Eigen::Index>(grid.y.count()));
}

Metric nmse(const Eigen::Ref<const Eigen::MatrixXcd>& reference,
            const Eigen::Ref<const Eigen::MatrixXcd>& test) {
  require_same_shape(reference.rows(), reference.cols(), test.rows(),
                     test.cols());
  double err = 0.0;
  double ref = 0.0;
  for (Eigen::Index c = 0; c < reference.cols(); ++c) {
    for (Eigen::Index r = 0; r < reference.rows(); ++r) {
      err += std::norm(reference(r, c) - test(r, c));
      ref += std::norm(reference(r, c));
    }
  }
  Metric m;
  m.mse = reference.size() > 0 ? err / static_cast<double>(reference.size())
                               : 0.0;
  if (ref > 0.0) m.nmse = err / ref;
  return m;
}

Metric nmse(const Signal& reference, const Signal& test) {
  return nmse(reference.samples, test.samples);
}

Metric nmse(const Field& reference, const Field& test) {
  return nmse(reference.values, test.values);
}

double energy(const Signal& s) {
  return s.grid.spacing() * s.samples.squaredNorm();
}

double energy(const Field& f) {
  return f.grid.x.spacing() * f.grid.y.spacing() * f.values.squaredNorm();
}

double hermite_gaussian(int order, double t) {
  if (order < 0) throw ArgumentError("Hermite-Gaussian order must be >= 0");
  const double gauss = std::exp(-0.5 * t * t);
  // Below DBL_MIN the seed has lost precision; that only matters where the
  // function is still O(1), i.e. inside the turning points.
  if (gauss < DBL_MIN &&
      std::abs(t) <= std::sqrt(2.0 * order + 1.0) + 1.0) {
    throw NumericalError("Hermite-Gaussian order " + std::to_string(order) +
                         " underflows at t = " + std::to_string(t));
  }
  double prev = std::pow(kPi, -0.25) * gauss;
  if (order == 0) return prev;
  double cur = std::sqrt(2.0) * t * prev;
  for (int k = 2; k <= order; ++k) {
    const double next = std::sqrt(2.0 / k) * t * cur -
                        std::sqrt(static_cast<double>(k - 1) / k) * prev;
    prev = cur;
    cur = next;
  }
  if (!std::isfinite(cur)) {
    throw NumericalError("Hermite-Gaussian order " + std::to_string(order) +
                         " overflows at t = " + std::to_string(t));
  }
  return cur;
}

Signal sample_hg(int order, const SampleGrid& grid) {
  Signal out(grid);
  for (std::size_t i = 0; i < grid.count(); ++i) {
    out.samples(static_cast<Eigen::Index>(i)) =
        hermite_gaussian(order, grid.position(i));
  }
  return out;
}

Field sample_lg0(int order, const FieldGrid& grid) {
  if (order < 0) throw ArgumentError("Laguerre-Gaussian order must be >= 0");
  Field out(grid, FieldKind::normalized);
  const double n = order;
  const double log_norm = 0.5 * (std::log(kPi) + std::lgamma(n + 1.0));
  for (std::size_t p = 0; p < grid.x.count(); ++p) {
    const double x = grid.x.position(p);
    for (std::size_t q = 0; q < grid.y.count(); ++q) {
      const double y = grid.y.position(q);
      const double r2 = x * x + y * y;
      Complex v{0.0, 0.0};
      if (r2 == 0.0) {
        if (order == 0) v = std::exp(-log_norm);
      } else {
        const double log_mag = 0.5 * n * std::log(r2) - 0.5 * r2 - log_norm;
        v = std::polar(std::exp(log_mag), n * std::atan2(y, x));
      }
      out.values(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q)) =
          v;
    }
  }
  return out;
}

Signal make_test_signal(const SampleGrid& grid) {
  Signal out(grid);
  for (std::size_t i = 0; i < grid.count(); ++i) {
    const double t = grid.position(i);
    const Complex fm = std::polar(std::exp(-t * t / 12.0), 3.0 * std::sin(1.2 * t));
    out.samples(static_cast<Eigen::Index>(i)) =
        fm + hermite_gaussian(6, t - 4.0) + hermite_gaussian(3, t + 5.0);
  }
  return out;
}

}  // namespace bargmann
