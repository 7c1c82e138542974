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

#include <array>

#include "gstab/lindblad.hpp"

namespace gstab {

// Hamiltonian-independent stabilizability analysis for two modes: a state V
// can be made stationary by some quadratic Hamiltonian only if
//   0 = 2 tr(I_C J Vt^k) + tr(R_C J Vt^{k-1}),   Vt := J V,
// for k = 1..4. The odd-k conditions hold identically for every (V, C); the
// even-k pair is the operative test. The conditions are necessary, not
// sufficient: the reconstruction below is the operational sufficiency check.

inline constexpr double kDefaultStabilizabilityTol = 1e-9;
inline constexpr double kDefaultReconstructionTol = 1e-9;

/// Left-hand side of the k-th condition; k in 1..4.
double condition_residual(const CovarianceMatrix& v, const LindbladSpec& d, int k);

struct StabilizabilityReport {
  /// Raw residuals for k = 1..4 (residuals[k-1]).
  std::array<double, 4> residuals{};
  /// Residuals divided by max(1, largest trace-term magnitude) of each
  /// condition; the even-k relative residuals decide stabilizability.
  std::array<double, 4> relative_residuals{};
  double tolerance = kDefaultStabilizabilityTol;
  bool stabilizable = false;
};

StabilizabilityReport is_stabilizable(const CovarianceMatrix& v, const LindbladSpec& d,
                                      double tol = kDefaultStabilizabilityTol);

struct ReconstructionResult {
  QuadraticHamiltonian g;
  /// Max-norm of A V + V A^T + J R_C J^T at the fixed point with the
  /// returned G.
  double residual = 0.0;
  bool solvable = false;
};

/// Minimum-norm least-squares solve of the linear system in the 10 unknowns
/// of symmetric G given by 0 = J(G+I_C)V + V(J(G+I_C))^T + J R_C J^T. The
/// returned G makes v stationary under evolve_covariance iff solvable.
ReconstructionResult reconstruct_hamiltonian(const CovarianceMatrix& v,
                                             const LindbladSpec& d,
                                             double tol = kDefaultReconstructionTol);

}  // namespace gstab
