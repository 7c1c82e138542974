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

#include "gstab/models.hpp"

#include <cmath>
#include <limits>

#include "gstab/measures.hpp"

namespace gstab {

namespace {

constexpr double kBoundaryTol = 1e-12;
constexpr double kBranchResidualTol = 1e-8;
const double kNan = std::numeric_limits<double>::quiet_NaN();

using std::cosh;
using std::sinh;
using std::sqrt;

// Eq.-(14)-shaped standard form without ordering constraints on the two
// symplectic labels (swapping them only relabels the modes).
StandardForm squeezed_shape(double nu_first, double nu_second, double r) {
  const double ch = cosh(r);
  const double sh = sinh(r);
  StandardForm sf;
  sf.a = nu_first * ch * ch + nu_second * sh * sh;
  sf.b = nu_first * sh * sh + nu_second * ch * ch;
  sf.c_plus = (nu_first + nu_second) / 2.0 * sinh(2.0 * r);
  sf.c_minus = -sf.c_plus;
  return sf;
}

// Fills measures and flags from the covariance pipeline. Unphysical points
// keep NaN measures.
StabilizableSolution solution_from_pipeline(const StandardForm& sf) {
  StabilizableSolution sol;
  sol.standard_form = sf;
  sol.log_negativity = kNan;
  sol.linear_entropy = kNan;
  const CovarianceMatrix v = build_from_standard_form(sf);
  sol.physical = check_physical(v).physical;
  if (sol.physical) {
    sol.log_negativity = log_negativity(v);
    sol.linear_entropy = linear_entropy(v);
    sol.entangled = sol.log_negativity > 0.0;
  }
  return sol;
}

double clip_nonneg(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace

// ---------------------------------------------------------------------------
// Local damping.

double LocalDampingParams::chi() const { return (1.0 / (x0 * x0) + x0 * x0) / 2.0; }

double LocalDampingParams::gamma_ratio() const {
  const double hi = std::max(gamma1, gamma2);
  const double lo = std::min(gamma1, gamma2);
  if (!(hi > 0.0)) {
    throw std::invalid_argument("local damping: gamma ratio undefined for zero rates");
  }
  return lo / hi;
}

void LocalDampingParams::validate() const {
  if (!(gamma1 >= 0.0) || !(gamma2 >= 0.0) || !(gamma1 + gamma2 > 0.0)) {
    throw std::invalid_argument(
        "local damping: rates must be nonnegative with gamma1 + gamma2 > 0");
  }
  if (!(x0 > 0.0) || !std::isfinite(x0)) {
    throw std::invalid_argument("local damping: x0 must be positive");
  }
}

LindbladSpec local_damping_spec(const LocalDampingParams& p) {
  p.validate();
  std::vector<Vec4c> channels;
  const std::complex<double> i(0.0, 1.0);
  Vec4c c1, c2;
  c1 << 1.0 / p.x0, i * p.x0, 0.0, 0.0;
  c2 << 0.0, 0.0, 1.0 / p.x0, i * p.x0;
  channels.push_back(sqrt(p.gamma1 / 2.0) * c1);
  channels.push_back(sqrt(p.gamma2 / 2.0) * c2);
  return LindbladSpec(std::move(channels));
}

double x0_from_chi(double chi) {
  if (!(chi >= 1.0)) {
    throw std::invalid_argument("x0_from_chi: requires chi >= 1");
  }
  return sqrt(chi + sqrt(chi * chi - 1.0));
}

StabilizableSolution damping_symmetric_manifold(double r, double chi, double gamma) {
  if (!(chi >= 1.0 - kBoundaryTol)) {
    throw std::invalid_argument("damping manifold: requires chi >= 1");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("damping manifold: requires gamma in [0,1]");
  }
  const double ch2 = cosh(r) * cosh(r);
  const double sh2 = sinh(r) * sinh(r);
  const double den_minus = 1.0 + gamma + (1.0 - gamma) * cosh(2.0 * r);
  const double den_plus = 1.0 + gamma - (1.0 - gamma) * cosh(2.0 * r);
  if (den_plus <= 0.0) {
    throw InfeasiblePointError("damping manifold: pole in nu+ (denominator <= 0)");
  }
  const double nu_minus = chi * (ch2 + gamma * sh2) / den_minus;
  const double nu_plus = chi * (gamma * ch2 + sh2) / den_plus;

  const StandardForm sf = squeezed_shape(nu_minus, nu_plus, r);
  if (gamma == 1.0) {
    StabilizableSolution sol;
    sol.standard_form = sf;
    sol.physical = true;  // nu = chi/2 cosh 2r >= 1/2 for all r, chi >= 1
    sol.log_negativity = damping_symmetric_log_negativity(r, chi);
    sol.linear_entropy = damping_symmetric_linear_entropy(r, chi);
    sol.entangled = sol.log_negativity > 0.0;
    return sol;
  }
  return solution_from_pipeline(sf);
}

double damping_symmetric_log_negativity(double r, double chi) {
  return clip_nonneg(std::log(2.0 / chi) - std::log1p(std::exp(-4.0 * r)));
}

double damping_symmetric_linear_entropy(double r, double chi) {
  const double scale = chi * cosh(2.0 * r);
  return 1.0 - 1.0 / (scale * scale);
}

double damping_symmetric_entanglement_threshold(double chi) {
  if (chi >= 2.0) return std::numeric_limits<double>::infinity();
  return std::atanh(chi - 1.0) / 2.0;
}

StabilizableSolution damping_equal_occupation_manifold(double a, double chi) {
  if (!(chi >= 1.0 - kBoundaryTol)) {
    throw std::invalid_argument("damping manifold: requires chi >= 1");
  }
  const double q = sqrt(std::max(chi * chi - 1.0, 0.0));
  const double den = 8.0 * a * (q + chi) - 2.0;
  if (den <= 0.0) {
    throw InfeasiblePointError("equal-occupation manifold: a below the feasible range");
  }
  StandardForm sf;
  sf.a = sf.b = a;
  const double excess = 2.0 * a - chi;
  const double radicand = a * excess * (1.0 + 2.0 * excess * (q + chi)) / den;
  if (radicand < -kBoundaryTol) {
    throw InfeasiblePointError("equal-occupation manifold: negative radicand");
  }
  sf.c_plus = sqrt(std::max(radicand, 0.0));
  if (sf.c_plus < 1e-14) {
    // Limit point a -> chi/2 where both correlations close to zero jointly.
    if (std::abs(excess) > 1e-7) {
      throw InfeasiblePointError("equal-occupation manifold: c+ degenerates away from a = chi/2");
    }
    sf.c_plus = 0.0;
    sf.c_minus = 0.0;
  } else {
    sf.c_minus = a * (chi - 2.0 * a) / (2.0 * sf.c_plus);
  }

  StabilizableSolution sol = solution_from_pipeline(sf);
  if (sol.physical) {
    sol.log_negativity = damping_equal_occupation_log_negativity(a, chi);
    sol.linear_entropy = damping_equal_occupation_linear_entropy(a, chi);
    sol.entangled = sol.log_negativity > 0.0;
  }
  return sol;
}

namespace {

double p_chi(double a, double chi) {
  return 2.0 * a * std::abs(4.0 * a - chi) / sqrt(16.0 * a * a - 8.0 * chi * a + 1.0);
}

}  // namespace

double damping_equal_occupation_log_negativity(double a, double chi) {
  const double inner =
      2.0 * a * (4.0 * a - chi) - 2.0 * p_chi(a, chi) * sqrt(2.0 * a * (2.0 * a - chi));
  if (inner <= 0.0) {
    throw NumericDomainError("equal-occupation log-negativity: nonpositive argument");
  }
  return clip_nonneg(-std::log(sqrt(inner)));
}

double damping_equal_occupation_linear_entropy(double a, double chi) {
  return 1.0 - 1.0 / p_chi(a, chi);
}

double damping_equal_occupation_entanglement_threshold(double chi) {
  const double q = sqrt(std::max(chi * chi - 1.0, 0.0));
  const double s3 = sqrt(3.0);
  return (9.0 * chi + 4.0 * s3 * q +
          sqrt(129.0 * chi * chi + 72.0 * s3 * chi * q - 80.0)) /
         8.0;
}

std::vector<StabilizableSolution> damping_general_solution(double a, double b,
                                                           const LocalDampingParams& p) {
  p.validate();
  if (!(a > 0.0 && b > 0.0)) {
    throw std::invalid_argument("general damping solution: requires a, b > 0");
  }
  const double g1 = p.gamma1, g2 = p.gamma2, x0 = p.x0;
  const double gs = g1 + g2;
  const double x2 = x0 * x0, x4 = x2 * x2, x6 = x4 * x2;

  // Quadratic A u^2 + B u + C = 0 in u = c-^2, obtained by eliminating c+
  // through the k = 2 condition (c+ = Gp / (4 c- x0^2 (g1+g2))) and
  // substituting into the k = 4 condition.
  const double Gp = g1 * a * (1.0 + x4 - 4.0 * a * x2) + g2 * b * (1.0 + x4 - 4.0 * b * x2);
  const double S = a * g2 + b * g1;
  const double P = 4.0 * a * b * x2 * gs;
  const double A = (P - x4 * S) / (2.0 * x2);
  const double B = -(Gp * Gp + P * P - P * S * (1.0 + x4)) / (8.0 * x4 * gs);
  const double C = (P - S) * Gp * Gp / (32.0 * x6 * gs * gs);

  std::vector<double> roots;
  const double coeff_scale = std::max({std::abs(A), std::abs(B), std::abs(C), 1.0});
  if (std::abs(A) < 1e-12 * coeff_scale) {
    // Degenerate quadratic: fall back to the linear solve for c-^2.
    if (std::abs(B) > 1e-12 * coeff_scale) roots.push_back(-C / B);
  } else {
    const double disc = B * B - 4.0 * A * C;
    if (disc >= -1e-12 * std::max(B * B, std::abs(4.0 * A * C))) {
      const double root = sqrt(std::max(disc, 0.0));
      roots.push_back((-B + root) / (2.0 * A));
      roots.push_back((-B - root) / (2.0 * A));
    }
  }

  const LindbladSpec spec = local_damping_spec(p);
  std::vector<StabilizableSolution> solutions;
  for (double u : roots) {
    if (u < -kBoundaryTol) continue;
    u = std::max(u, 0.0);
    for (int sign : {+1, -1}) {
      const double cm = sign * sqrt(u);
      double cp = 0.0;
      if (std::abs(cm) < 1e-12) {
        if (sign < 0) break;  // +0 and -0 coincide
        if (std::abs(Gp) > 1e-10) continue;  // c+ unbounded, no finite solution
      } else {
        cp = Gp / (4.0 * cm * x2 * gs);
      }
      StandardForm sf{a, b, cp, cm};
      const double ab_scale = std::max(1.0, a * b);
      if (a * b - cp * cp < -kBoundaryTol * ab_scale ||
          a * b - cm * cm < -kBoundaryTol * ab_scale) {
        continue;
      }
      const CovarianceMatrix v = build_from_standard_form(sf);
      if (!check_physical(v).physical) continue;
      if (!is_stabilizable(v, spec, kBranchResidualTol).stabilizable) continue;
      StabilizableSolution sol;
      sol.standard_form = sf;
      sol.physical = true;
      sol.log_negativity = log_negativity(v);
      sol.linear_entropy = linear_entropy(v);
      sol.entangled = sol.log_negativity > 0.0;
      solutions.push_back(sol);
    }
  }
  return solutions;
}

// ---------------------------------------------------------------------------
// Squeezed-state-preserving dissipators.

void SqueezedDissipatorParams::validate() const {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("squeezed dissipator: requires alpha >= 0");
  }
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("squeezed dissipator: requires eta >= 0");
  }
}

LindbladSpec squeezed_dissipator_spec(const SqueezedDissipatorParams& p) {
  p.validate();
  const std::complex<double> i(0.0, 1.0);
  const double ch = cosh(p.alpha);
  const double sh = sinh(p.alpha);
  const double s2 = sqrt(2.0);
  // a_k = (x_k + i p_k)/sqrt(2): L1 = ch a1 - sh a2^dag, L2 = ch a2 - sh a1^dag.
  Vec4c c1, c2;
  c1 << ch / s2, i * ch / s2, -sh / s2, i * sh / s2;
  c2 << -sh / s2, i * sh / s2, ch / s2, i * ch / s2;
  std::vector<Vec4c> channels{c1, c2};
  if (p.eta > 0.0) {
    const LindbladSpec local = local_damping_spec({p.eta, p.eta, 1.0});
    channels.insert(channels.end(), local.channels().begin(), local.channels().end());
  }
  return LindbladSpec(std::move(channels));
}

StabilizableSolution squeezed_manifold(double r, const SqueezedDissipatorParams& p) {
  p.validate();
  const double nu = cosh(2.0 * (r - p.alpha)) / 2.0;
  StabilizableSolution sol;
  sol.standard_form = squeezed_shape(nu, nu, r);
  sol.physical = true;  // nu >= 1/2 for all r, alpha
  sol.log_negativity = squeezed_log_negativity(r, p.alpha, p.eta);
  sol.linear_entropy = squeezed_linear_entropy(r, p.alpha);
  sol.entangled = sol.log_negativity > 0.0;
  return sol;
}

double squeezed_log_negativity(double r, double alpha, double eta) {
  double value = 2.0 * r - std::log(cosh(2.0 * (r - alpha)));
  if (eta > 0.0) {
    value -= std::log((1.0 + eta * cosh(2.0 * r) / cosh(2.0 * (r - alpha))) / (1.0 + eta));
  }
  return clip_nonneg(value);
}

double squeezed_linear_entropy(double r, double alpha) {
  const double t = std::tanh(2.0 * (r - alpha));
  return t * t;
}

double squeezed_entanglement_threshold(double alpha) {
  return (2.0 * alpha - std::log(2.0 - std::exp(-2.0 * alpha))) / 4.0;
}

// ---------------------------------------------------------------------------
// Cascaded oscillators.

void CascadedParams::validate() const {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw std::invalid_argument("cascaded dissipator: requires kappa > 0");
  }
}

LindbladSpec cascaded_spec(const CascadedParams& p) {
  p.validate();
  const std::complex<double> i(0.0, 1.0);
  Vec4c c;
  c << 1.0, i, 1.0, i;
  return LindbladSpec({sqrt(p.kappa / 2.0) * c});
}

double cascaded_c_plus_min(double a) { return sqrt((a - 1.0) * a + 0.5) - 0.5; }

double cascaded_c_plus_max(double a) {
  return (a - 0.5 + sqrt(2.0 * a * (2.0 * a - 1.0) * (4.0 * a - 1.0) * (4.0 * a + 1.0))) /
         (8.0 * a - 1.0);
}

double cascaded_c_plus_mid(double a) { return sqrt(a * (a - 0.5)); }

StabilizableSolution cascaded_manifold(double a, double c_plus) {
  if (!(a >= 0.5 - kBoundaryTol)) {
    throw InfeasiblePointError("cascaded manifold: requires a >= 1/2");
  }
  const double scale = std::max(1.0, a);
  if (c_plus <= cascaded_c_plus_min(a) - kBoundaryTol * scale ||
      c_plus > cascaded_c_plus_max(a) + kBoundaryTol * scale) {
    throw InfeasiblePointError("cascaded manifold: c+ outside the feasibility interval");
  }
  StandardForm sf;
  sf.a = sf.b = a;
  sf.c_plus = c_plus;
  sf.c_minus = -a + (a + c_plus) / (4.0 * a + 4.0 * c_plus - 1.0);

  StabilizableSolution sol;
  sol.standard_form = sf;
  sol.physical = check_physical(build_from_standard_form(sf)).physical;
  sol.log_negativity = cascaded_log_negativity(a, c_plus);
  sol.linear_entropy = cascaded_linear_entropy(a, c_plus);
  sol.entangled = sol.log_negativity > 0.0;
  return sol;
}

double cascaded_log_negativity(double a, double c_plus) {
  const double ratio = (a * a - c_plus * c_plus) / (4.0 * a + 4.0 * c_plus - 1.0);
  if (ratio <= 0.0) {
    throw NumericDomainError("cascaded log-negativity: nonpositive argument");
  }
  return clip_nonneg(-std::log(2.0 * sqrt(ratio)));
}

double cascaded_linear_entropy(double a, double c_plus) {
  const double o = c_plus * (8.0 * a - 1.0) + a * (8.0 * a - 3.0);
  return 1.0 - (4.0 * a + 4.0 * c_plus - 1.0) /
                   (4.0 * (a + c_plus) * sqrt((a - c_plus) * o));
}

// ---------------------------------------------------------------------------
// Reference Hamiltonians.

QuadraticHamiltonian reference_hamiltonian(ReferenceModel model, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("reference hamiltonian: requires omega > 0");
  }
  Mat4 g = Mat4::Zero();
  switch (model) {
    case ReferenceModel::kSqueezing:
      // H = -i w (a1 a2 - a1^dag a2^dag) = w (x1 p2 + x2 p1).
      g(0, 3) = g(3, 0) = omega;
      g(1, 2) = g(2, 1) = omega;
      break;
    case ReferenceModel::kCascaded:
      // H = (-i w/2) [(a1+a2)^2 - (a1^dag+a2^dag)^2]
      //   = w (x1+x2)(p1+p2), symmetrized.
      g << 0.0, 1.0, 0.0, 1.0,
           1.0, 0.0, 1.0, 0.0,
           0.0, 1.0, 0.0, 1.0,
           1.0, 0.0, 1.0, 0.0;
      g *= omega;
      break;
  }
  return QuadraticHamiltonian(g);
}

}  // namespace gstab
