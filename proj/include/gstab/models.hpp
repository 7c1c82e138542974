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

#include <vector>

#include "gstab/stabilizability.hpp"

namespace gstab {

// The three benchmark dissipators and their closed-form stabilizable
// manifolds. Quadrature convention a_k = (x_k + i p_k)/sqrt(2) throughout.

/// A point on a stabilizable manifold together with its measures and flags.
struct StabilizableSolution {
  StandardForm standard_form;
  double log_negativity = 0.0;
  double linear_entropy = 0.0;
  bool physical = false;
  bool entangled = false;
};

// ---------------------------------------------------------------------------
// Local damping: L_k = sqrt(gamma_k/2) (x_k/x0 + i x0 p_k).

struct LocalDampingParams {
  double gamma1 = 1.0;
  double gamma2 = 1.0;
  double x0 = 1.0;

  /// chi = (x0^-2 + x0^2)/2 >= 1.
  double chi() const;
  /// gamma = min/max of the rates, in [0,1]; requires both rates nonzero for
  /// a nonzero result denominator.
  double gamma_ratio() const;
  /// Throws std::invalid_argument unless gamma1,gamma2 >= 0, gamma1+gamma2 > 0
  /// and x0 > 0.
  void validate() const;
};

LindbladSpec local_damping_spec(const LocalDampingParams& p);

/// The x0 >= 1 root of chi = (x0^-2 + x0^2)/2.
double x0_from_chi(double chi);

/// Stabilizable c+ = -c- family in the squeezed-state parametrization:
///   nu-(r,chi,gamma) = chi (cosh^2 r + gamma sinh^2 r) / (1+gamma+(1-gamma) cosh 2r),
///   nu+(r,chi,gamma) = chi (gamma cosh^2 r + sinh^2 r) / (1+gamma-(1-gamma) cosh 2r).
/// Throws InfeasiblePointError when the nu+ denominator is <= 0 (pole).
StabilizableSolution damping_symmetric_manifold(double r, double chi, double gamma);

/// Closed-form measures of the gamma = 1 symmetric family (nu = chi/2 cosh 2r):
///   E_N = max{0, ln(2/chi) - ln(1 + e^{-4r})},  S_L = 1 - (chi cosh 2r)^{-2}.
double damping_symmetric_log_negativity(double r, double chi);
double damping_symmetric_linear_entropy(double r, double chi);
/// Entanglement threshold of the gamma = 1 family: entangled iff
/// 2r > artanh(chi - 1) (requires chi < 2 for any entanglement).
double damping_symmetric_entanglement_threshold(double chi);

/// Stabilizable a = b family (rate-independent):
///   c+(a,chi) = sqrt( a(2a-chi)[1 + 2(2a-chi)(q+chi)] / [8a(q+chi) - 2] ),
///   c-(a,chi) = a(chi-2a)/(2 c+),  q = sqrt(chi^2-1).
/// Throws InfeasiblePointError when the radicand is negative.
StabilizableSolution damping_equal_occupation_manifold(double a, double chi);

double damping_equal_occupation_log_negativity(double a, double chi);
double damping_equal_occupation_linear_entropy(double a, double chi);
/// Entanglement requires 8a > 9chi + 4 sqrt(3) q + sqrt(129 chi^2 + 72 sqrt(3) chi q - 80).
double damping_equal_occupation_entanglement_threshold(double chi);

/// All real solutions (c+, c-) of the two stabilizability conditions for
/// given diagonal entries (a, b) and dissipator parameters: a quadratic in
/// c-^2 (both roots, both signs of c-, joint sign flips included). Each
/// candidate is filtered by realness, physicality of the resulting state and
/// a residual check of both conditions (relative tolerance 1e-8); candidates
/// failing physicality are dropped, so 0..4 solutions are returned.
std::vector<StabilizableSolution> damping_general_solution(double a, double b,
                                                           const LocalDampingParams& p);

// ---------------------------------------------------------------------------
// Dissipators engineered to preserve the two-mode squeezed state with r = alpha:
//   L_1 = cosh(alpha) a_1 - sinh(alpha) a_2^dag,
//   L_2 = cosh(alpha) a_2 - sinh(alpha) a_1^dag,
// optionally perturbed by two local-damping channels with gamma1=gamma2=eta,
// x0 = 1.

struct SqueezedDissipatorParams {
  double alpha = 0.0;
  double eta = 0.0;

  void validate() const;
};

LindbladSpec squeezed_dissipator_spec(const SqueezedDissipatorParams& p);

/// Stabilizable c+ = -c- family of the unperturbed dissipator:
/// nu- = nu+ = (1/2) cosh 2(r - alpha); always physical. For eta > 0 the
/// reported log-negativity follows the perturbed closed form (see
/// squeezed_log_negativity); the standard form is the eta = 0 manifold state.
StabilizableSolution squeezed_manifold(double r, const SqueezedDissipatorParams& p);

/// E_N(r, alpha) = max{0, -ln[e^{-2r} cosh 2(r-alpha)]}, lowered for eta > 0 by
/// ln[(1 + eta cosh 2r / cosh 2(r-alpha)) / (1 + eta)].
double squeezed_log_negativity(double r, double alpha, double eta = 0.0);
/// S_L(r, alpha) = tanh^2 2(r - alpha).
double squeezed_linear_entropy(double r, double alpha);
/// Entangled iff 4r > 2 alpha - ln(2 - e^{-2 alpha}).
double squeezed_entanglement_threshold(double alpha);

// ---------------------------------------------------------------------------
// Cascaded oscillators coupled to the vacuum: L = sqrt(kappa) (a_1 + a_2).

struct CascadedParams {
  double kappa = 1.0;

  void validate() const;
};

LindbladSpec cascaded_spec(const CascadedParams& p);

/// Feasibility interval of c+ for the a = b family, Eq-driven:
///   c+_min(a) = sqrt((a-1)a + 1/2) - 1/2,
///   c+_max(a) = [a - 1/2 + sqrt(2a(2a-1)(4a-1)(4a+1))] / (8a - 1),
///   c+_mid(a) = sqrt(a(a - 1/2))   (the c+ = -c- slice).
double cascaded_c_plus_min(double a);
double cascaded_c_plus_max(double a);
double cascaded_c_plus_mid(double a);

/// Stabilizable a = b family: c-(a, c+) = -a + (a+c+)/(4a+4c+-1). Requires
/// a >= 1/2 and c+ in (c+_min, c+_max] (boundaries admitted within 1e-12);
/// throws InfeasiblePointError otherwise.
StabilizableSolution cascaded_manifold(double a, double c_plus);

/// E_N(a, c+) = max{0, -ln( 2 sqrt((a^2 - c+^2)/(4a + 4c+ - 1)) )}.
double cascaded_log_negativity(double a, double c_plus);
/// S_L(a, c+) = 1 - (4a+4c+-1) / [4(a+c+) sqrt((a-c+) o)], o = c+(8a-1) + a(8a-3).
double cascaded_linear_entropy(double a, double c_plus);

// ---------------------------------------------------------------------------
// Reference stabilizing Hamiltonians, expressed as generator matrices in the
// quadrature convention above (both traceless):
//   squeezing:  H = -i w (a1 a2 - a1^dag a2^dag)  ->  G = w * antidiag(1,1,1,1),
//   cascaded:   H = (-i w/2) [(a1+a2)^2 - (a1^dag+a2^dag)^2].

enum class ReferenceModel { kSqueezing, kCascaded };

QuadraticHamiltonian reference_hamiltonian(ReferenceModel model, double omega);

}  // namespace gstab
