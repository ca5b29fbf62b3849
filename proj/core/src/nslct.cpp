// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

#include "bargmann/nslct.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "bargmann/error.hpp"

namespace bargmann {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kJ{0.0, 1.0};
constexpr double kTolerance = 1e-12;

using Index = Eigen::Index;

Eigen::Matrix2cd antidiag(double v) {
  Eigen::Matrix2cd m;
  m << 0.0, v, v, 0.0;
  return m;
}

bool is_zero(const Eigen::Matrix2cd& m) { return m.cwiseAbs().maxCoeff() <= kTolerance; }

// Integer entry of a signed permutation, or 2 when the entry is not 0/+-1.
int signed_unit(Complex v) {
  if (std::abs(v.imag()) > kTolerance) return 2;
  for (int k : {-1, 0, 1}) {
    if (std::abs(v.real() - k) <= kTolerance) return k;
  }
  return 2;
}

Field apply_b_zero(const Field& field, const ParamMatrix4& m) {
  const Eigen::Matrix2cd d = m.d();
  int dt[2][2];
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) dt[r][c] = signed_unit(d(c, r));
  }
  const bool valid_entries = dt[0][0] != 2 && dt[0][1] != 2 && dt[1][0] != 2 && dt[1][1] != 2;
  const bool diagonal = valid_entries && dt[0][1] == 0 && dt[1][0] == 0 &&
                        dt[0][0] != 0 && dt[1][1] != 0;
  const bool swap = valid_entries && dt[0][0] == 0 && dt[1][1] == 0 &&
                    dt[0][1] != 0 && dt[1][0] != 0;
  const FieldGrid& g = field.grid;
  if (!diagonal && !(swap && g.x == g.y)) {
    throw ArgumentError(
        "NsLCT with B = 0 requires D^T to map the sampling grid onto itself "
        "(signed permutation; axis swaps need identical axes)");
  }

  const Eigen::Matrix2cd cdt = m.c() * d.transpose();
  const ChirpMatrix2 chirp(cdt);
  const Complex root_det = std::sqrt(d.determinant());

  Field remapped(g, field.kind);
  const auto nx = static_cast<Index>(g.x.count());
  const auto ny = static_cast<Index>(g.y.count());
  const Index hx = g.x.half();
  const Index hy = g.y.half();
  for (Index p = 0; p < nx; ++p) {
    for (Index q = 0; q < ny; ++q) {
      const Index i = p - hx;
      const Index k = q - hy;
      const Index u = dt[0][0] * i + dt[0][1] * k;
      const Index v = dt[1][0] * i + dt[1][1] * k;
      remapped.values(p, q) = root_det * field.values(u + hx, v + hy);
    }
  }
  return is_zero(cdt) ? remapped : chirp_multiply_2d(remapped, chirp);
}

void require_square(const Field& field, const char* what) {
  const FieldGrid& g = field.grid;
  if (g.x.count() != g.y.count() || !same_grid(g.x, g.y)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << " requires a square field with dx == dy; got " << g.x.count()
        << "x" << g.y.count() << " with dx=" << g.x.spacing() << ", dy="
        << g.y.spacing() << " (required dy=" << g.x.spacing() << ")";
    throw GridConstraintError(msg.str());
  }
}

}  // namespace

ParamMatrix4 ParamMatrix4::from_blocks(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b,
                                       const Eigen::Matrix2cd& c, const Eigen::Matrix2cd& d) {
  Eigen::Matrix4cd m;
  m << a, b, c, d;
  return ParamMatrix4(m);
}

ParamMatrix4 ParamMatrix4::gyrator(double alpha) {
  const Eigen::Matrix2cd i = Eigen::Matrix2cd::Identity();
  return from_blocks(std::cos(alpha) * i, antidiag(std::sin(alpha)),
                     antidiag(-std::sin(alpha)), std::cos(alpha) * i);
}

ParamMatrix4 ParamMatrix4::gaussian() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m(3, 1) = kJ;
  return ParamMatrix4(m);
}

ParamMatrix4 ParamMatrix4::bargmann() { return gyrator(-kPi / 4.0) * gaussian(); }

ParamMatrix4 ParamMatrix4::inverse() const {
  return from_blocks(d().transpose(), -b().transpose(), -c().transpose(), a().transpose());
}

bool check_symplectic(const ParamMatrix4& m) {
  Eigen::Matrix4cd j = Eigen::Matrix4cd::Zero();
  j.topRightCorner<2, 2>() = Eigen::Matrix2cd::Identity();
  j.bottomLeftCorner<2, 2>() = -Eigen::Matrix2cd::Identity();
  const Eigen::Matrix4cd r = m.matrix() * j * m.matrix().transpose() - j;
  return r.cwiseAbs().maxCoeff() <= kTolerance;
}

CmccmStages cmccm_decompose(const ParamMatrix4& m) {
  const Eigen::Matrix2cd b = m.b();
  const double scale = b.cwiseAbs().maxCoeff();
  if (scale <= kTolerance || std::abs(b.determinant()) <= kTolerance * scale * scale) {
    throw ArgumentError(
        "CM-CC-CM decomposition requires a nonsingular B block; use the B = 0 "
        "branch of the NsLCT instead");
  }
  const Eigen::Matrix2cd i = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd b_inv = b.inverse();
  return CmccmStages{ChirpMatrix2(b_inv * (m.a() - i)), b,
                     ChirpMatrix2((m.d() - i) * b_inv)};
}

ParamMatrix4 recompose(const CmccmStages& stages) {
  const Eigen::Matrix2cd i = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd z = Eigen::Matrix2cd::Zero();
  const ParamMatrix4 pre = ParamMatrix4::from_blocks(i, z, stages.pre.entries(), i);
  const ParamMatrix4 conv = ParamMatrix4::from_blocks(i, stages.convolution, z, i);
  const ParamMatrix4 post = ParamMatrix4::from_blocks(i, z, stages.post.entries(), i);
  return post * conv * pre;
}

Field nslct_apply(const Field& field, const ParamMatrix4& m) {
  if (!check_symplectic(m)) {
    throw ArgumentError("NsLCT parameter matrix is not symplectic");
  }
  if (is_zero(m.b())) return apply_b_zero(field, m);
  const CmccmStages st = cmccm_decompose(m);
  return chirp_multiply_2d(chirp_convolve_2d(chirp_multiply_2d(field, st.pre), st.convolution),
                           st.post);
}

Field forward_nslct(const Signal& signal) {
  Field cloned(FieldGrid{signal.grid, signal.grid}, FieldKind::normalized);
  cloned.values = signal.samples.replicate(1, static_cast<Index>(signal.grid.count()));
  Field out = nslct_apply(cloned, ParamMatrix4::bargmann());
  out.values *= std::pow(kPi, -0.25);
  return out;
}

Signal inverse_nslct(const Field& field) {
  if (field.kind != FieldKind::normalized) {
    throw ArgumentError("inverse_nslct requires a normalized field, got " +
                        std::string(to_string(field.kind)));
  }
  require_square(field, "inverse_nslct");
  const ParamMatrix4 inv = ParamMatrix4::bargmann().inverse();
  if (!check_symplectic(inv)) {
    throw NumericalError("inverse Bargmann parameter matrix failed the symplectic check");
  }
  const CmccmStages st = cmccm_decompose(inv);
  const Field front = chirp_convolve_2d(chirp_multiply_2d(field, st.pre), st.convolution);
  Signal s = chirp_multiply_x_axis(front, st.post);
  s.samples *= std::pow(kPi, 0.25);
  return s;
}

}  // namespace bargmann
