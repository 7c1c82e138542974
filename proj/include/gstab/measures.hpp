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

#include <map>

#include "gstab/symplectic.hpp"

namespace gstab {

// Entanglement and mixedness measures for two-mode Gaussian states.
// All of them reject unphysical inputs (NumericDomainError) instead of
// clamping; natural-log units throughout.

struct MeasureReport {
  double log_negativity = 0.0;  // nats, >= 0
  double linear_entropy = 0.0;  // in [0, 1)
  double purity = 1.0;          // in (0, 1]
  std::map<double, double> renyi;
};

/// E_N(V) = max{0, -ln(2 nu~_-)}.
double log_negativity(const CovarianceMatrix& v);

/// tr rho^p = g_p(2 nu+) g_p(2 nu-) with g_p(x) = 2^p / [(x+1)^p - (x-1)^p].
/// Requires p > 1.
double trace_power(const CovarianceMatrix& v, double p);

/// mu = tr rho^2 = 1 / (4 nu+ nu-).
double purity(const CovarianceMatrix& v);

/// S_L = 1 - mu.
double linear_entropy(const CovarianceMatrix& v);

/// ln(tr rho^p) / (1 - p) for p > 1; zero for pure states. The Tsallis
/// variants (1 - tr rho^p)/(p - 1) follow from trace_power directly and are
/// not wrapped separately.
double renyi_entropy(const CovarianceMatrix& v, double p);

MeasureReport measure_report(const CovarianceMatrix& v,
                             const std::vector<double>& renyi_orders = {});

}  // namespace gstab
