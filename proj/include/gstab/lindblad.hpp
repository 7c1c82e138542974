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

#include <optional>
#include <vector>

#include "gstab/symplectic.hpp"

namespace gstab {

/// Covariance evolution left its numeric range (fixed-step instability).
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, double time, std::size_t steps)
      : std::runtime_error(what), time_reached(time), steps_completed(steps) {}
  double time_reached;
  std::size_t steps_completed;
};

/// A set of Lindblad operators linear in the quadratures, L_k = c_k . xi,
/// held as the complex coefficient vectors c_k. The derived coupling matrix
/// is C†C with C_kl = (c_k)_l; its real part R_C is symmetric, its imaginary
/// part I_C antisymmetric, and C†C >= 0 by construction.
class LindbladSpec {
 public:
  LindbladSpec() = default;
  explicit LindbladSpec(std::vector<Vec4c> channels);

  const std::vector<Vec4c>& channels() const { return channels_; }
  std::size_t channel_count() const { return channels_.size(); }

  const Mat4& re_coupling() const { return re_coupling_; }  // R_C
  const Mat4& im_coupling() const { return im_coupling_; }  // I_C

  /// J R_C J^T, the diffusion term of the covariance evolution.
  Mat4 diffusion() const;

 private:
  std::vector<Vec4c> channels_;
  Mat4 re_coupling_ = Mat4::Zero();
  Mat4 im_coupling_ = Mat4::Zero();
};

/// Generator matrix G of a quadratic Hamiltonian, real symmetric; normalized
/// so that the Hamiltonian part of the drift is exactly J*G.
class QuadraticHamiltonian {
 public:
  QuadraticHamiltonian() : g_(Mat4::Zero()) {}
  explicit QuadraticHamiltonian(const Mat4& g);

  static QuadraticHamiltonian zero() { return QuadraticHamiltonian(); }
  const Mat4& generator() const { return g_; }

 private:
  Mat4 g_;
};

enum class IntegratorMethod { kClassicRk4 };

struct EvolutionConfig {
  double step = 1e-3;
  double horizon = 1.0;
  IntegratorMethod method = IntegratorMethod::kClassicRk4;

  void validate() const;
};

/// A = J (G + I_C).
Mat4 drift_matrix(const QuadraticHamiltonian& h, const LindbladSpec& d);

/// Fixed-step classic 4th-order integration of
///   dV/dt = A V + V A^T + J R_C J^T,
/// with the state resymmetrized after every step. Throws DivergenceError when
/// any entry exceeds 1e12 in magnitude.
CovarianceMatrix evolve_covariance(const CovarianceMatrix& v0,
                                   const QuadraticHamiltonian& h,
                                   const LindbladSpec& d,
                                   const EvolutionConfig& cfg);

struct TrajectorySample {
  double t = 0.0;
  Mat4 v = Mat4::Zero();
};

struct TrajectoryResult {
  std::vector<TrajectorySample> samples;
  bool diverged = false;
  double diverged_at = 0.0;
};

/// As evolve_covariance, but records the state every `sample_interval` of
/// simulated time (snapped to whole steps; t = 0 and t = horizon always
/// included). Divergence stops the integration and is reported in the result
/// instead of thrown, so the rows produced so far survive.
TrajectoryResult evolve_trajectory(const CovarianceMatrix& v0,
                                   const QuadraticHamiltonian& h,
                                   const LindbladSpec& d,
                                   const EvolutionConfig& cfg,
                                   double sample_interval);

struct SteadyStateResult {
  std::optional<CovarianceMatrix> covariance;
  /// True when the spectrum of A guarantees a unique solution (no pair of
  /// eigenvalues sums to zero within 1e-10).
  bool unique = false;
  /// Dimension of the symmetric solution family of the homogeneous equation
  /// when no unique solution exists; 0 otherwise.
  int null_space_dimension = 0;
  /// Max-norm fixed-point residual of the returned covariance (NaN if none).
  double residual = 0.0;
};

/// Solves the continuous Lyapunov equation A V + V A^T = -J R_C J^T over the
/// 10 independent entries of symmetric V.
SteadyStateResult steady_state(const QuadraticHamiltonian& h, const LindbladSpec& d);

}  // namespace gstab
