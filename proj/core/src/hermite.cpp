// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#include "bargmann/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "bargmann/error.hpp"

namespace bargmann {

namespace {

using Index = Eigen::Index;

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

void require_basis_grid(const SampleGrid& grid, const HgBasis& basis, const char* what) {
  if (!same_grid(grid, basis.grid())) {
    std::ostringstream msg;
    msg << what << ": grid (" << grid.count() << ", " << grid.spacing()
        << ") does not match the basis grid (" << basis.grid().count() << ", "
        << basis.grid().spacing() << ")";
    throw ArgumentError(msg.str());
  }
}

Complex j_power(int e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

HgBasis::HgBasis(SampleGrid grid, Eigen::MatrixXd matrix)
    : grid_(grid), matrix_(std::move(matrix)) {
  const auto n = static_cast<Index>(grid_.count());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw ArgumentError("basis matrix must be N x N");
  }
}

HgBasis build_hg_basis(const SampleGrid& grid) {
  const auto n = static_cast<Index>(grid.count());
  const double root = std::sqrt(grid.spacing());
  Eigen::MatrixXd sampled(n, n);
  for (Index k = 0; k < n; ++k) {
    sampled.col(k) = root * sample_hg(static_cast<int>(k), grid).samples.real();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(sampled);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd& r = qr.matrixQR();
  for (Index k = 0; k < n; ++k) {
    if (std::abs(r(k, k)) < 1e-10) {
      std::ostringstream msg;
      msg << "sampled HG matrix is rank deficient at order " << k
          << "; widen or refine the grid";
      throw NumericalError(msg.str());
    }
    if (r(k, k) < 0.0) q.col(k) = -q.col(k);
  }
  return HgBasis(grid, std::move(q));
}

Eigen::VectorXcd hg_coefficients(const Signal& signal, const HgBasis& basis) {
  require_basis_grid(signal.grid, basis, "hg_coefficients");
  return basis.matrix().transpose() * signal.samples;
}

double wigner_d_pi2(HalfInt j, HalfInt m, HalfInt mp) {
  const int j2 = j.twice();
  const int m2 = m.twice();
  const int mp2 = mp.twice();
  if (j2 < 0 || std::abs(m2) > j2 || std::abs(mp2) > j2 || (j2 - m2) % 2 != 0 ||
      (j2 - mp2) % 2 != 0) {
    std::ostringstream msg;
    msg << "invalid Wigner-d indices J=" << j.value() << " M=" << m.value()
        << " M'=" << mp.value();
    throw ArgumentError(msg.str());
  }
  // Integers j+m, j-m, j+mp, j-mp, m-mp.
  const int jpm = (j2 + m2) / 2;
  const int jmm = (j2 - m2) / 2;
  const int jpmp = (j2 + mp2) / 2;
  const int jmmp = (j2 - mp2) / 2;
  const int dm = (m2 - mp2) / 2;

  const double log_norm =
      0.5 * (log_factorial(jpm) + log_factorial(jmm) + log_factorial(jpmp) +
             log_factorial(jmmp));
  // cos(pi/4)^a sin(pi/4)^b with a + b = 2J.
  const double log_trig = -0.5 * static_cast<double>(j2) * std::log(2.0);
  double sum = 0.0;
  for (int s = std::max(0, -dm); s <= std::min(jpmp, jmm); ++s) {
    const double log_term = log_norm + log_trig - log_factorial(jpmp - s) -
                            log_factorial(s) - log_factorial(dm + s) -
                            log_factorial(jmm - s);
    const double sign = ((dm + s) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * std::exp(log_term);
  }
  return sum;
}

Complex coupling_coefficient(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    std::ostringstream msg;
    msg << "coupling coefficient requires 0 <= k <= n (got n=" << n << ", k=" << k << ")";
    throw ArgumentError(msg.str());
  }
  const double log_mag = 0.5 * (log_factorial(n) - log_factorial(k) - log_factorial(n - k)) -
                         0.5 * static_cast<double>(n) * std::log(2.0);
  return j_power(n - k) * std::exp(log_mag);
}

CouplingTable::CouplingTable(std::size_t size) : size_(size) {
  values_.reserve(size * (size + 1) / 2);
  for (std::size_t n = 0; n < size; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      values_.push_back(coupling_coefficient(static_cast<int>(n), static_cast<int>(k)));
    }
  }
}

Field forward_hg(const Signal& signal, const HgBasis& basis) {
  const Eigen::VectorXcd coeffs = hg_coefficients(signal, basis);
  const auto n = static_cast<Index>(basis.size());
  const CouplingTable table(basis.size());
  Eigen::MatrixXcd tilde = Eigen::MatrixXcd::Zero(n, n);
  for (Index order = 0; order < n; ++order) {
    for (Index k = 0; k <= order; ++k) {
      tilde(k, order - k) = coeffs(order) * table(static_cast<std::size_t>(order),
                                                  static_cast<std::size_t>(k));
    }
  }
  const Eigen::MatrixXd& h = basis.matrix();
  Eigen::MatrixXcd values = h * tilde * h.transpose();
  values /= std::sqrt(basis.grid().spacing());
  return Field(FieldGrid{basis.grid(), basis.grid()}, std::move(values),
               FieldKind::normalized);
}

Signal inverse_hg(const Field& field, const HgBasis& basis) {
  if (field.kind != FieldKind::normalized) {
    throw ArgumentError("inverse_hg requires a normalized field, got " +
                        std::string(to_string(field.kind)));
  }
  require_basis_grid(field.grid.x, basis, "inverse_hg (x axis)");
  require_basis_grid(field.grid.y, basis, "inverse_hg (y axis)");
  const auto n = static_cast<Index>(basis.size());
  const Eigen::MatrixXd& h = basis.matrix();
  const Eigen::MatrixXcd tilde =
      std::sqrt(basis.grid().spacing()) * (h.transpose() * field.values * h);
  const CouplingTable table(basis.size());
  // Least squares along anti-diagonal `order`: the coupling vector has unit
  // norm, so the solution is its conjugate inner product with the entries.
  Eigen::VectorXcd coeffs(n);
  for (Index order = 0; order < n; ++order) {
    Complex acc = 0.0;
    for (Index k = 0; k <= order; ++k) {
      acc += std::conj(table(static_cast<std::size_t>(order), static_cast<std::size_t>(k))) *
             tilde(k, order - k);
    }
    coeffs(order) = acc;
  }
  return Signal(basis.grid(), h * coeffs);
}

Signal zero_pad(const Signal& signal, std::size_t count) {
  const std::size_t current = signal.grid.count();
  if (count < current || count % 2 == 0) {
    std::ostringstream msg;
    msg << "zero_pad: target length must be odd and at least " << current
        << " (got " << count << ")";
    throw ArgumentError(msg.str());
  }
  Signal out(SampleGrid(count, signal.grid.spacing()));
  out.samples.segment(static_cast<Index>((count - current) / 2),
                      static_cast<Index>(current)) = signal.samples;
  return out;
}

}  // namespace bargmann
