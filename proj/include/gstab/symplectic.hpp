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

#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace gstab {

// Quadrature ordering is (x1, p1, x2, p2) with hbar = 1; the vacuum state has
// covariance (1/2)*I. All logarithms in the library are natural.
using Mat4 = Eigen::Matrix4d;
using Mat4c = Eigen::Matrix4cd;
using Vec4c = Eigen::Vector4cd;

inline constexpr double kVacuumVariance = 0.5;

// Tolerances shared module-wide: exact construction / symmetry checks at
// 1e-12, accumulated-rounding comparisons (congruences, spectral oracles)
// at 1e-9.
inline constexpr double kConstructionTol = 1e-12;
inline constexpr double kComparisonTol = 1e-9;

/// Standard-form reduction failed (the invariants do not describe a valid
/// two-mode covariance matrix).
class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quantity left its mathematical domain (negative radicand, measure of an
/// unphysical state, ...).
class NumericDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested point lies outside a model's feasibility region.
class InfeasiblePointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The two-mode symplectic form, block diagonal [[0,1],[-1,0]] per mode.
const Mat4& symplectic_form();

/// Canonical 4-parameter shape (a, b, c_plus, c_minus) of a two-mode
/// covariance matrix under local symplectic operations. The canonical sign
/// convention used by to_standard_form is c_plus >= |c_minus|; the struct
/// itself also admits non-canonical parameter sets (e.g. squeezed states with
/// negative squeezing), which describe the same local-symplectic orbit.
struct StandardForm {
  double a = kVacuumVariance;
  double b = kVacuumVariance;
  double c_plus = 0.0;
  double c_minus = 0.0;

  /// Throws std::invalid_argument unless a,b > 0, all entries finite, and
  /// a*b - c^2 >= 0 for both correlations (within kConstructionTol).
  void validate() const;
};

/// Symplectic eigenvalues nu_minus <= nu_plus; a state is physical iff
/// nu_minus >= 1/2.
struct SymplecticSpectrum {
  double nu_minus = 0.0;
  double nu_plus = 0.0;
};

/// Heisenberg check, reported as the two residuals
///   h1 = 4*Delta - 16*det V - 1   and   h2 = -4*Delta + 2,
/// both of which must be <= 0 for a physical state.
struct PhysicalityReport {
  double h1 = 0.0;
  double h2 = 0.0;
  bool h1_ok = false;
  bool h2_ok = false;
  bool physical = false;
};

/// Real symmetric positive-definite 4x4 second-moment matrix. Ingested
/// matrices are symmetrized; asymmetry beyond 1e-12 or a spectrum below
/// -1e-12 is rejected.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(const Mat4& entries);

  const Mat4& matrix() const { return entries_; }

 private:
  Mat4 entries_;
};

/// Local symplectic invariants of a two-mode covariance matrix:
/// determinants of the A/B diagonal blocks, of the off-diagonal block, and
/// of the full matrix.
struct LocalInvariants {
  double det_a = 0.0;
  double det_b = 0.0;
  double det_c = 0.0;
  double det_v = 0.0;
};
LocalInvariants local_invariants(const Mat4& v);

/// Delta(V) = det A + det B + 2 det C; equals a^2 + b^2 + 2 c+ c- in
/// standard form.
double delta_invariant(const CovarianceMatrix& v);

CovarianceMatrix build_from_standard_form(const StandardForm& sf);

/// Reduces v to its canonical standard form via the local symplectic
/// invariants (a quadratic solve for c+^2, c-^2); invariant under any local
/// symplectic congruence of v. Throws ReductionError when the quadratic for
/// the correlations has no real solution beyond tolerance.
StandardForm to_standard_form(const CovarianceMatrix& v);

SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& v);

/// Mirror reflection of the second momentum (p2 -> -p2); an involution.
Mat4 partial_transpose(const Mat4& v);

/// Symplectic spectrum of the partially transposed state; nu_minus < 1/2
/// signals entanglement (PPT criterion, necessary and sufficient for two
/// modes).
SymplecticSpectrum partial_transpose_spectrum(const CovarianceMatrix& v);

PhysicalityReport check_physical(const CovarianceMatrix& v);

/// Standard form of the nonsymmetric two-mode squeezed thermal state with
/// symplectic eigenvalues (nu_minus, nu_plus) and squeezing parameter r:
///   a  = nu- cosh^2 r + nu+ sinh^2 r,
///   b  = nu- sinh^2 r + nu+ cosh^2 r,
///   c+/- = +/- (nu- + nu+)/2 * sinh 2r.
/// Requires 1/2 <= nu_minus <= nu_plus.
StandardForm squeezed_parametrization(double nu_minus, double nu_plus, double r);

}  // namespace gstab
