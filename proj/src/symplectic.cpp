// Copyright 2026 The gstab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gstab/symplectic.hpp"

#include <cmath>

namespace gstab {

namespace {

bool all_finite(const Mat4& m) { return m.allFinite(); }

SymplecticSpectrum spectrum_from_invariants(double delta, double det_v) {
  const double inner = delta * delta - 4.0 * det_v;
  if (inner < -kConstructionTol * std::max(1.0, delta * delta)) {
    throw NumericDomainError("symplectic spectrum: negative inner radicand " +
                             std::to_string(inner));
  }
  if (delta <= 0.0 || det_v < 0.0) {
    throw NumericDomainError("symplectic spectrum: invariants out of range");
  }
  const double root = std::sqrt(std::max(inner, 0.0));
  // The two squared eigenvalues multiply to det V; dividing avoids the
  // cancellation in (delta - root) for strongly squeezed states.
  const double hi = (delta + root) / 2.0;
  const double lo = hi > 0.0 ? det_v / hi : 0.0;
  return {std::sqrt(lo), std::sqrt(hi)};
}

}  // namespace

const Mat4& symplectic_form() {
  static const Mat4 j = [] {
    Mat4 m = Mat4::Zero();
    m(0, 1) = 1.0;
    m(1, 0) = -1.0;
    m(2, 3) = 1.0;
    m(3, 2) = -1.0;
    return m;
  }();
  return j;
}

void StandardForm::validate() const {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c_plus) &&
        std::isfinite(c_minus))) {
    throw std::invalid_argument("standard form: non-finite entry");
  }
  if (!(a > 0.0 && b > 0.0)) {
    throw std::invalid_argument("standard form: a and b must be positive");
  }
  const double scale = std::max(1.0, a * b);
  if (a * b - c_plus * c_plus < -kConstructionTol * scale ||
      a * b - c_minus * c_minus < -kConstructionTol * scale) {
    throw std::invalid_argument("standard form: correlations violate ab - c^2 >= 0");
  }
}

CovarianceMatrix::CovarianceMatrix(const Mat4& entries) {
  if (!all_finite(entries)) {
    throw std::invalid_argument("covariance matrix: non-finite entry");
  }
  const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
  if ((entries - entries.transpose()).cwiseAbs().maxCoeff() > kConstructionTol * scale) {
    throw std::invalid_argument("covariance matrix: not symmetric within 1e-12");
  }
  entries_ = (entries + entries.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat4> es(entries_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= -kConstructionTol) {
    throw NumericDomainError("covariance matrix: not positive definite (min eigenvalue " +
                             std::to_string(es.eigenvalues().minCoeff()) + ")");
  }
}

LocalInvariants local_invariants(const Mat4& v) {
  LocalInvariants inv;
  inv.det_a = v(0, 0) * v(1, 1) - v(0, 1) * v(1, 0);
  inv.det_b = v(2, 2) * v(3, 3) - v(2, 3) * v(3, 2);
  inv.det_c = v(0, 2) * v(1, 3) - v(0, 3) * v(1, 2);
  inv.det_v = v.determinant();
  return inv;
}

double delta_invariant(const CovarianceMatrix& v) {
  const StandardForm sf = to_standard_form(v);
  return sf.a * sf.a + sf.b * sf.b + 2.0 * sf.c_plus * sf.c_minus;
}

CovarianceMatrix build_from_standard_form(const StandardForm& sf) {
  sf.validate();
  Mat4 m = Mat4::Zero();
  m(0, 0) = m(1, 1) = sf.a;
  m(2, 2) = m(3, 3) = sf.b;
  m(0, 2) = m(2, 0) = sf.c_plus;
  m(1, 3) = m(3, 1) = sf.c_minus;
  return CovarianceMatrix(m);
}

namespace {

// Inverse principal square root of a symmetric positive definite 2x2 matrix,
// via sqrt(M) = (M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M)).
Eigen::Matrix2d inverse_sqrt_2x2(const Eigen::Matrix2d& m, double det_m) {
  const double rd = std::sqrt(det_m);
  const double scale = std::sqrt(m.trace() + 2.0 * rd);
  Eigen::Matrix2d root = (m + rd * Eigen::Matrix2d::Identity()) / scale;
  const double det_root = root.determinant();
  Eigen::Matrix2d inverse;
  inverse << root(1, 1), -root(0, 1), -root(1, 0), root(0, 0);
  return inverse / det_root;
}

// Largest singular value of a 2x2 matrix, cancellation-free.
double max_singular_value_2x2(const Eigen::Matrix2d& m) {
  const double h1 = std::hypot(m(0, 0) - m(1, 1), m(0, 1) + m(1, 0));
  const double h2 = std::hypot(m(0, 0) + m(1, 1), m(0, 1) - m(1, 0));
  return (h1 + h2) / 2.0;
}

}  // namespace

StandardForm to_standard_form(const CovarianceMatrix& v) {
  const Mat4& m = v.matrix();
  const Eigen::Matrix2d block_a = m.block<2, 2>(0, 0);
  const Eigen::Matrix2d block_b = m.block<2, 2>(2, 2);
  const Eigen::Matrix2d block_c = m.block<2, 2>(0, 2);
  const double det_a = block_a.determinant();
  const double det_b = block_b.determinant();
  if (det_a <= 0.0 || det_b <= 0.0) {
    throw ReductionError("standard form: nonpositive block determinant");
  }
  const double a = std::sqrt(det_a);
  const double b = std::sqrt(det_b);

  // Whiten each mode with the local symplectic S_k = sqrt(det)^(1/2) M^(-1/2)
  // (unit determinant, so symplectic); the diagonal blocks become a I and
  // b I, and local rotations then diagonalize the correlation block into
  // diag(c+, c-). Only the singular values of the whitened block are needed:
  // c+ is the largest one and c+ c- = det C is a local symplectic invariant.
  const Eigen::Matrix2d s1 = std::sqrt(a) * inverse_sqrt_2x2(block_a, det_a);
  const Eigen::Matrix2d s2 = std::sqrt(b) * inverse_sqrt_2x2(block_b, det_b);
  const Eigen::Matrix2d whitened = s1 * block_c * s2.transpose();

  StandardForm sf;
  sf.a = a;
  sf.b = b;
  // Canonical representative: c+ >= |c-| >= 0 with sign(c-) = sign(det C).
  sf.c_plus = max_singular_value_2x2(whitened);
  sf.c_minus = (sf.c_plus < 1e-150) ? 0.0 : block_c.determinant() / sf.c_plus;
  return sf;
}

namespace {

// Delta and det V evaluated from the reduced scalars; much better
// conditioned than a direct 4x4 determinant for strongly squeezed states.
struct ReducedInvariants {
  double delta;
  double delta_pt;
  double det_v;
};

ReducedInvariants reduced_invariants(const CovarianceMatrix& v) {
  const StandardForm sf = to_standard_form(v);
  ReducedInvariants inv;
  const double cross = 2.0 * sf.c_plus * sf.c_minus;
  inv.delta = sf.a * sf.a + sf.b * sf.b + cross;
  inv.delta_pt = sf.a * sf.a + sf.b * sf.b - cross;
  inv.det_v = (sf.a * sf.b - sf.c_plus * sf.c_plus) *
              (sf.a * sf.b - sf.c_minus * sf.c_minus);
  return inv;
}

}  // namespace

SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& v) {
  const ReducedInvariants inv = reduced_invariants(v);
  return spectrum_from_invariants(inv.delta, inv.det_v);
}

Mat4 partial_transpose(const Mat4& v) {
  Mat4 p = Mat4::Identity();
  p(3, 3) = -1.0;
  return p * v * p;
}

SymplecticSpectrum partial_transpose_spectrum(const CovarianceMatrix& v) {
  const ReducedInvariants inv = reduced_invariants(v);
  return spectrum_from_invariants(inv.delta_pt, inv.det_v);
}

PhysicalityReport check_physical(const CovarianceMatrix& v) {
  const ReducedInvariants inv = reduced_invariants(v);
  PhysicalityReport report;
  report.h1 = 4.0 * inv.delta - 16.0 * inv.det_v - 1.0;
  report.h2 = -4.0 * inv.delta + 2.0;
  report.h1_ok = report.h1 <= kConstructionTol;
  report.h2_ok = report.h2 <= kConstructionTol;
  report.physical = report.h1_ok && report.h2_ok;
  return report;
}

StandardForm squeezed_parametrization(double nu_minus, double nu_plus, double r) {
  if (!(std::isfinite(nu_minus) && std::isfinite(nu_plus) && std::isfinite(r))) {
    throw std::invalid_argument("squeezed parametrization: non-finite input");
  }
  if (nu_minus < kVacuumVariance - kConstructionTol || nu_plus < nu_minus - kConstructionTol) {
    throw std::invalid_argument("squeezed parametrization: requires 1/2 <= nu- <= nu+");
  }
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  StandardForm sf;
  sf.a = nu_minus * ch * ch + nu_plus * sh * sh;
  sf.b = nu_minus * sh * sh + nu_plus * ch * ch;
  sf.c_plus = (nu_minus + nu_plus) / 2.0 * std::sinh(2.0 * r);
  sf.c_minus = -sf.c_plus;
  return sf;
}

}  // namespace gstab
