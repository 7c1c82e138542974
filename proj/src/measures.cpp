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

#include "gstab/measures.hpp"

#include <cmath>

namespace gstab {

namespace {

// Unphysical inputs are rejected rather than clamped so that model-solver
// bugs surface as errors, not as silently truncated measures.
void require_physical(const CovarianceMatrix& v) {
  if (!check_physical(v).physical) {
    throw NumericDomainError("measures: state violates the Heisenberg bound");
  }
}

double g_p(double x, double p) {
  // x = 2 nu >= 1 for physical states; clamp sub-ulp range violations so
  // fractional powers stay real at the pure-state boundary.
  x = std::max(x, 1.0);
  return std::pow(2.0, p) / (std::pow(x + 1.0, p) - std::pow(x - 1.0, p));
}

}  // namespace

double log_negativity(const CovarianceMatrix& v) {
  require_physical(v);
  const SymplecticSpectrum nt = partial_transpose_spectrum(v);
  return std::max(0.0, -std::log(2.0 * nt.nu_minus));
}

double trace_power(const CovarianceMatrix& v, double p) {
  if (!(p > 1.0)) {
    throw std::invalid_argument("trace_power: requires p > 1");
  }
  require_physical(v);
  const SymplecticSpectrum nu = symplectic_eigenvalues(v);
  return g_p(2.0 * nu.nu_plus, p) * g_p(2.0 * nu.nu_minus, p);
}

double purity(const CovarianceMatrix& v) {
  require_physical(v);
  const SymplecticSpectrum nu = symplectic_eigenvalues(v);
  return 1.0 / (4.0 * nu.nu_plus * nu.nu_minus);
}

double linear_entropy(const CovarianceMatrix& v) { return 1.0 - purity(v); }

double renyi_entropy(const CovarianceMatrix& v, double p) {
  return std::log(trace_power(v, p)) / (1.0 - p);
}

MeasureReport measure_report(const CovarianceMatrix& v,
                             const std::vector<double>& renyi_orders) {
  MeasureReport report;
  report.log_negativity = log_negativity(v);
  report.purity = purity(v);
  report.linear_entropy = 1.0 - report.purity;
  for (double p : renyi_orders) {
    report.renyi[p] = renyi_entropy(v, p);
  }
  return report;
}

}  // namespace gstab
