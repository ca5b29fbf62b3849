// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The bargmann Authors

// Transform as one 2D nonseparable linear canonical transform with a complex
// symplectic 4x4 parameter matrix, evaluated through the CM-CC-CM
// decomposition.

#pragma once

#include <Eigen/Dense>

#include "bargmann/signal.hpp"
#include "bargmann/spectral.hpp"

namespace bargmann {

/// M = [A B; C D] with 2x2 complex blocks. Not validated on construction;
/// see check_symplectic.
class ParamMatrix4 {
 public:
  ParamMatrix4() : m_(Eigen::Matrix4cd::Identity()) {}
  explicit ParamMatrix4(const Eigen::Matrix4cd& m) : m_(m) {}
  static ParamMatrix4 from_blocks(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b,
                                  const Eigen::Matrix2cd& c, const Eigen::Matrix2cd& d);

  static ParamMatrix4 identity() { return ParamMatrix4(); }
  /// A = D = cos(a) I, B = sin(a) antidiag(1,1), C = -sin(a) antidiag(1,1).
  static ParamMatrix4 gyrator(double alpha);
  /// Identity except C = diag(0, j): multiplication by exp(-tau^2/2).
  static ParamMatrix4 gaussian();
  /// gyrator(-pi/4) * gaussian().
  static ParamMatrix4 bargmann();

  const Eigen::Matrix4cd& matrix() const { return m_; }
  Eigen::Matrix2cd a() const { return m_.topLeftCorner<2, 2>(); }
  Eigen::Matrix2cd b() const { return m_.topRightCorner<2, 2>(); }
  Eigen::Matrix2cd c() const { return m_.bottomLeftCorner<2, 2>(); }
  Eigen::Matrix2cd d() const { return m_.bottomRightCorner<2, 2>(); }

  /// Closed-form symplectic inverse [D^T -B^T; -C^T A^T].
  ParamMatrix4 inverse() const;

  ParamMatrix4 operator*(const ParamMatrix4& rhs) const {
    return ParamMatrix4(m_ * rhs.m_);
  }

 private:
  Eigen::Matrix4cd m_;
};

/// True iff max|M J M^T - J| <= 1e-12 with J = [0 I; -I 0].
bool check_symplectic(const ParamMatrix4& m);

/// Chirp multiply by `pre`, chirp convolve with `convolution`, chirp
/// multiply by `post`.
struct CmccmStages {
  ChirpMatrix2 pre;
  Eigen::Matrix2cd convolution;
  ChirpMatrix2 post;
};

/// pre = B^-1 (A - I), convolution = B, post = (D - I) B^-1. Throws
/// ArgumentError for a singular B block (use the B = 0 branch).
CmccmStages cmccm_decompose(const ParamMatrix4& m);

/// [I 0; post I] [I B; 0 I] [I 0; pre I].
ParamMatrix4 recompose(const CmccmStages& stages);

/// Applies the NsLCT with parameter matrix `m` on the field's own grid.
/// B != 0: CM-CC-CM pipeline; every chirp must decay over the plane.
/// B == 0: sqrt(det D) exp((j/2) t^T C D^T t) f(D^T t), with D a signed
/// permutation so that D^T t stays on the grid.
/// Throws ArgumentError for non-symplectic m, growing chirps or a B = 0
/// matrix whose D does not map the grid onto itself.
Field nslct_apply(const Field& field, const ParamMatrix4& m);

/// S = pi^(-1/4) NsLCT_{M_NB}{ s(t) for every tau } on dx = dy = dt.
Field forward_nslct(const Signal& signal);

/// s(t) = pi^(1/4) NsLCT_{M_NB^-1}{S}(t, 0). The last chirp of M_NB^-1 grows
/// along tau, so it is evaluated on the tau = 0 line only. Requires a
/// square field with dx == dy (GridConstraintError otherwise).
Signal inverse_nslct(const Field& field);

}  // namespace bargmann
