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

#include "gstab/stabilizability.hpp"

#include <cmath>

namespace gstab {

namespace {

struct ConditionTerms {
  double dissipative = 0.0;  // 2 tr(I_C J Vt^k)
  double diffusive = 0.0;    // tr(R_C J Vt^{k-1})
};

ConditionTerms condition_terms(const CovarianceMatrix& v, const LindbladSpec& d, int k) {
  if (k < 1 || k > 4) {
    throw std::invalid_argument("condition_residual: k must be in 1..4");
  }
  const Mat4& j = symplectic_form();
  const Mat4 vt = j * v.matrix();
  Mat4 vt_k = Mat4::Identity();
  for (int i = 0; i < k - 1; ++i) vt_k *= vt;
  ConditionTerms terms;
  terms.diffusive = (d.re_coupling() * j * vt_k).trace();
  vt_k *= vt;
  terms.dissipative = 2.0 * (d.im_coupling() * j * vt_k).trace();
  return terms;
}

constexpr int kSymRow[10] = {0, 0, 0, 0, 1, 1, 1, 2, 2, 3};
constexpr int kSymCol[10] = {0, 1, 2, 3, 1, 2, 3, 2, 3, 3};

}  // namespace

double condition_residual(const CovarianceMatrix& v, const LindbladSpec& d, int k) {
  const ConditionTerms terms = condition_terms(v, d, k);
  return terms.dissipative + terms.diffusive;
}

StabilizabilityReport is_stabilizable(const CovarianceMatrix& v, const LindbladSpec& d,
                                      double tol) {
  StabilizabilityReport report;
  report.tolerance = tol;
  for (int k = 1; k <= 4; ++k) {
    const ConditionTerms terms = condition_terms(v, d, k);
    const double raw = terms.dissipative + terms.diffusive;
    const double scale =
        std::max({1.0, std::abs(terms.dissipative), std::abs(terms.diffusive)});
    report.residuals[k - 1] = raw;
    report.relative_residuals[k - 1] = std::abs(raw) / scale;
  }
  report.stabilizable =
      report.relative_residuals[1] < tol && report.relative_residuals[3] < tol;
  return report;
}

ReconstructionResult reconstruct_hamiltonian(const CovarianceMatrix& v,
                                             const LindbladSpec& d, double tol) {
  const Mat4& j = symplectic_form();
  const Mat4& vm = v.matrix();
  const Mat4 inhomogeneity =
      j * d.im_coupling() * vm + vm * (j * d.im_coupling()).transpose() + d.diffusion();

  // G symmetric has 10 degrees of freedom; the stationarity equation is
  // symmetric as well, so the linear system is 10x10:
  //   J G V - V G J = -(J I_C V + V (J I_C)^T + J R_C J^T).
  Eigen::Matrix<double, 10, 10> system;
  for (int k = 0; k < 10; ++k) {
    Mat4 basis = Mat4::Zero();
    basis(kSymRow[k], kSymCol[k]) = 1.0;
    basis(kSymCol[k], kSymRow[k]) = 1.0;
    const Mat4 image = j * basis * vm - vm * basis * j;
    for (int m = 0; m < 10; ++m) {
      system(m, k) = image(kSymRow[m], kSymCol[m]);
    }
  }
  Eigen::Matrix<double, 10, 1> target;
  for (int m = 0; m < 10; ++m) {
    target(m) = -inhomogeneity(kSymRow[m], kSymCol[m]);
  }

  // Minimum-norm least squares; the stabilizing Hamiltonian is not unique.
  const Eigen::Matrix<double, 10, 1> g_vec =
      system.completeOrthogonalDecomposition().solve(target);
  Mat4 g;
  for (int k = 0; k < 10; ++k) {
    g(kSymRow[k], kSymCol[k]) = g_vec(k);
    g(kSymCol[k], kSymRow[k]) = g_vec(k);
  }

  ReconstructionResult result;
  result.g = QuadraticHamiltonian(g);
  const Mat4 closure = j * g * vm - vm * g * j + inhomogeneity;
  result.residual = closure.cwiseAbs().maxCoeff();
  result.solvable = result.residual < tol;
  return result;
}

}  // namespace gstab
