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

#include "gstab/lindblad.hpp"

#include <cmath>
#include <complex>

namespace gstab {

namespace {

constexpr double kDivergenceLimit = 1e12;
constexpr double kResonanceTol = 1e-10;

// Index pairs of the 10 independent entries of a symmetric 4x4 matrix.
constexpr int kSymRow[10] = {0, 0, 0, 0, 1, 1, 1, 2, 2, 3};
constexpr int kSymCol[10] = {0, 1, 2, 3, 1, 2, 3, 2, 3, 3};

Eigen::Matrix<double, 10, 1> sym_to_vec(const Mat4& m) {
  Eigen::Matrix<double, 10, 1> v;
  for (int k = 0; k < 10; ++k) v(k) = m(kSymRow[k], kSymCol[k]);
  return v;
}

Mat4 vec_to_sym(const Eigen::Matrix<double, 10, 1>& v) {
  Mat4 m;
  for (int k = 0; k < 10; ++k) {
    m(kSymRow[k], kSymCol[k]) = v(k);
    m(kSymCol[k], kSymRow[k]) = v(k);
  }
  return m;
}

// The Lyapunov operator X -> A X + X A^T restricted to symmetric X, as a
// 10x10 matrix over the independent entries.
Eigen::Matrix<double, 10, 10> lyapunov_operator(const Mat4& a) {
  Eigen::Matrix<double, 10, 10> op;
  for (int k = 0; k < 10; ++k) {
    Mat4 basis = Mat4::Zero();
    basis(kSymRow[k], kSymCol[k]) = 1.0;
    basis(kSymCol[k], kSymRow[k]) = 1.0;
    op.col(k) = sym_to_vec(a * basis + basis * a.transpose());
  }
  return op;
}

}  // namespace

LindbladSpec::LindbladSpec(std::vector<Vec4c> channels) : channels_(std::move(channels)) {
  Mat4c coupling = Mat4c::Zero();
  for (const Vec4c& c : channels_) {
    if (!c.allFinite()) {
      throw std::invalid_argument("lindblad spec: non-finite coefficient");
    }
    coupling += c.conjugate() * c.transpose();
  }
  // C†C is Hermitian, so Re is symmetric and Im antisymmetric; enforce both
  // exactly against rounding.
  re_coupling_ = (coupling.real() + coupling.real().transpose()) / 2.0;
  im_coupling_ = (coupling.imag() - coupling.imag().transpose()) / 2.0;
}

Mat4 LindbladSpec::diffusion() const {
  const Mat4& j = symplectic_form();
  return j * re_coupling_ * j.transpose();
}

QuadraticHamiltonian::QuadraticHamiltonian(const Mat4& g) {
  if (!g.allFinite()) {
    throw std::invalid_argument("quadratic hamiltonian: non-finite entry");
  }
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > kConstructionTol * scale) {
    throw std::invalid_argument("quadratic hamiltonian: generator not symmetric");
  }
  g_ = (g + g.transpose()) / 2.0;
}

void EvolutionConfig::validate() const {
  if (!(step > 0.0) || !(horizon > 0.0) || !std::isfinite(step) || !std::isfinite(horizon)) {
    throw std::invalid_argument("evolution config: step and horizon must be positive");
  }
  if (!(step < horizon)) {
    throw std::invalid_argument("evolution config: step must be smaller than horizon");
  }
}

Mat4 drift_matrix(const QuadraticHamiltonian& h, const LindbladSpec& d) {
  return symplectic_form() * (h.generator() + d.im_coupling());
}

namespace {

Mat4 rhs(const Mat4& a, const Mat4& q, const Mat4& v) {
  return a * v + v * a.transpose() + q;
}

// One classic RK4 step followed by exact resymmetrization.
Mat4 rk4_step(const Mat4& a, const Mat4& q, const Mat4& v, double dt) {
  const Mat4 k1 = rhs(a, q, v);
  const Mat4 k2 = rhs(a, q, v + 0.5 * dt * k1);
  const Mat4 k3 = rhs(a, q, v + 0.5 * dt * k2);
  const Mat4 k4 = rhs(a, q, v + dt * k3);
  Mat4 next = v + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  return (next + next.transpose()) / 2.0;
}

}  // namespace

TrajectoryResult evolve_trajectory(const CovarianceMatrix& v0,
                                   const QuadraticHamiltonian& h,
                                   const LindbladSpec& d,
                                   const EvolutionConfig& cfg,
                                   double sample_interval) {
  cfg.validate();
  if (!(sample_interval > 0.0)) {
    throw std::invalid_argument("evolve: sample interval must be positive");
  }
  const Mat4 a = drift_matrix(h, d);
  const Mat4 q = d.diffusion();

  const auto total_steps = static_cast<std::size_t>(std::ceil(cfg.horizon / cfg.step - 1e-9));
  // Output rows are snapped to whole integration steps.
  const auto stride = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(sample_interval / cfg.step)));

  TrajectoryResult result;
  result.samples.push_back({0.0, v0.matrix()});

  Mat4 v = v0.matrix();
  for (std::size_t i = 0; i < total_steps; ++i) {
    const double t = i * cfg.step;
    const double dt = std::min(cfg.step, cfg.horizon - t);
    v = rk4_step(a, q, v, dt);
    const double t_next = std::min(t + cfg.step, cfg.horizon);
    if (v.cwiseAbs().maxCoeff() > kDivergenceLimit) {
      result.diverged = true;
      result.diverged_at = t_next;
      return result;
    }
    if ((i + 1) % stride == 0 || i + 1 == total_steps) {
      result.samples.push_back({t_next, v});
    }
  }
  return result;
}

CovarianceMatrix evolve_covariance(const CovarianceMatrix& v0, const QuadraticHamiltonian& h,
                                   const LindbladSpec& d, const EvolutionConfig& cfg) {
  cfg.validate();
  const Mat4 a = drift_matrix(h, d);
  const Mat4 q = d.diffusion();
  const auto total_steps = static_cast<std::size_t>(std::ceil(cfg.horizon / cfg.step - 1e-9));
  Mat4 v = v0.matrix();
  for (std::size_t i = 0; i < total_steps; ++i) {
    const double t = i * cfg.step;
    const double dt = std::min(cfg.step, cfg.horizon - t);
    v = rk4_step(a, q, v, dt);
    if (v.cwiseAbs().maxCoeff() > kDivergenceLimit) {
      throw DivergenceError("evolve: integration diverged", t + dt, i + 1);
    }
  }
  return CovarianceMatrix(v);
}

SteadyStateResult steady_state(const QuadraticHamiltonian& h, const LindbladSpec& d) {
  const Mat4 a = drift_matrix(h, d);
  const Mat4 q = d.diffusion();
  SteadyStateResult result;
  result.residual = std::numeric_limits<double>::quiet_NaN();

  const Eigen::Vector4cd eigs = Eigen::EigenSolver<Mat4>(a, false).eigenvalues();
  bool resonant = false;
  for (int i = 0; i < 4 && !resonant; ++i) {
    for (int j = i; j < 4; ++j) {
      if (std::abs(eigs(i) + eigs(j)) < kResonanceTol) {
        resonant = true;
        break;
      }
    }
  }

  const Eigen::Matrix<double, 10, 10> op = lyapunov_operator(a);
  if (resonant) {
    // No unique solution; report the dimension of the symmetric solution
    // family of the homogeneous equation.
    Eigen::JacobiSVD<Eigen::Matrix<double, 10, 10>> svd(op);
    const double cutoff = kResonanceTol * std::max(1.0, svd.singularValues()(0));
    int nullity = 0;
    for (int i = 0; i < 10; ++i) {
      if (svd.singularValues()(i) < cutoff) ++nullity;
    }
    result.unique = false;
    result.null_space_dimension = nullity;
    return result;
  }

  const Eigen::Matrix<double, 10, 1> solution =
      op.colPivHouseholderQr().solve(-sym_to_vec(q));
  const Mat4 v = vec_to_sym(solution);
  result.unique = true;
  result.residual = (a * v + v * a.transpose() + q).cwiseAbs().maxCoeff();
  result.covariance = CovarianceMatrix(v);
  return result;
}

}  // namespace gstab
