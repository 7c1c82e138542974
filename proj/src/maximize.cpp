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

#include "gstab/maximize.hpp"

#include <cmath>
#include <functional>
#include <optional>

namespace gstab {

namespace {

using Objective = std::function<std::optional<StabilizableSolution>(double)>;

double objective_value(const std::optional<StabilizableSolution>& sol) {
  if (!sol || !sol->physical || !std::isfinite(sol->log_negativity)) {
    return -std::numeric_limits<double>::infinity();
  }
  return sol->log_negativity;
}

// Golden-section refinement of a unimodal maximum inside [lo, hi].
double golden_section(const Objective& eval, double lo, double hi, double tol,
                      int* evaluations) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = objective_value(eval(x1));
  double f2 = objective_value(eval(x2));
  *evaluations += 2;
  while (hi - lo > tol * std::max(1.0, std::abs(hi))) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = objective_value(eval(x2));
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = objective_value(eval(x1));
    }
    ++*evaluations;
  }
  return (lo + hi) / 2.0;
}

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

MaximizeResult run_maximize(const MaximizeRequest& request) {
  Objective eval;
  std::string axis;
  double lo = request.lo;
  double hi = request.hi;

  if (request.model == "local_damping_symmetric") {
    axis = "r";
    if (lo == 0.0 && hi == 0.0) hi = 10.0;
    const double chi = get_param(request.params, "chi", 1.0);
    const double gamma = get_param(request.params, "gamma", 1.0);
    eval = [chi, gamma](double r) -> std::optional<StabilizableSolution> {
      try {
        return damping_symmetric_manifold(r, chi, gamma);
      } catch (const InfeasiblePointError&) {
        return std::nullopt;
      }
    };
  } else if (request.model == "local_damping_equal_occupation") {
    axis = "a";
    if (lo == 0.0 && hi == 0.0) {
      lo = 0.5;
      hi = 1e4;
    }
    const double chi = get_param(request.params, "chi", 1.0);
    eval = [chi](double a) -> std::optional<StabilizableSolution> {
      try {
        return damping_equal_occupation_manifold(a, chi);
      } catch (const InfeasiblePointError&) {
        return std::nullopt;
      }
    };
  } else if (request.model == "squeezed") {
    axis = "r";
    if (lo == 0.0 && hi == 0.0) hi = 10.0;
    SqueezedDissipatorParams params{get_param(request.params, "alpha", 0.0),
                                    get_param(request.params, "eta", 0.0)};
    eval = [params](double r) -> std::optional<StabilizableSolution> {
      return squeezed_manifold(r, params);
    };
  } else if (request.model == "cascaded") {
    axis = "a";
    if (lo == 0.0 && hi == 0.0) {
      lo = 0.5;
      hi = 1e4;
    }
    const bool mid = get_param(request.params, "c_plus_rule", 0.0) == 1.0;
    eval = [mid](double a) -> std::optional<StabilizableSolution> {
      try {
        const double cp = mid ? cascaded_c_plus_mid(a) : cascaded_c_plus_max(a);
        return cascaded_manifold(a, cp);
      } catch (const InfeasiblePointError&) {
        return std::nullopt;
      }
    };
  } else {
    throw std::invalid_argument("maximize: unknown model '" + request.model + "'");
  }

  if (!(hi > lo)) {
    throw std::invalid_argument("maximize: empty search interval");
  }

  MaximizeResult result;
  result.axis = axis;

  // Coarse grid pass delimits the bracket for the golden-section refinement.
  const int n = std::max(request.grid_points, 8);
  int best_idx = -1;
  double best_val = -std::numeric_limits<double>::infinity();
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    const double v = objective_value(eval(grid[i]));
    ++result.evaluations;
    if (v > best_val) {
      best_val = v;
      best_idx = i;
    }
  }
  if (best_idx < 0 || !std::isfinite(best_val)) {
    throw InfeasiblePointError("maximize: no feasible point in the search box");
  }

  const double bracket_lo = grid[std::max(best_idx - 1, 0)];
  const double bracket_hi = grid[std::min(best_idx + 1, n - 1)];
  double argmax =
      golden_section(eval, bracket_lo, bracket_hi, request.axis_tol, &result.evaluations);
  auto best = eval(argmax);
  if (objective_value(best) < best_val) {
    argmax = grid[best_idx];
    best = eval(argmax);
  }
  result.argmax = argmax;
  result.best = *best;
  // An asymptotic supremum shows up as the box edge attaining the maximum
  // (within evaluation noise; the objective can plateau below double
  // resolution long before the edge).
  const double at_edge = objective_value(eval(hi));
  ++result.evaluations;
  result.boundary_hit =
      at_edge >= objective_value(best) - 1e-9 * std::max(1.0, std::abs(at_edge));
  return result;
}

}  // namespace gstab
