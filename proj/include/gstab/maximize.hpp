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
#include <string>

#include "gstab/models.hpp"

namespace gstab {

/// Entanglement maximization over a model's stabilizable manifold:
/// derivative-free, coarse grid followed by golden-section refinement along
/// the scan axis.
struct MaximizeRequest {
  /// local_damping_symmetric (axis r), local_damping_equal_occupation (axis a),
  /// squeezed (axis r), cascaded (axis a; fixed "c_plus_rule": 0 = max, 1 = mid).
  std::string model;
  std::map<std::string, double> params;
  /// Search box along the scan axis; defaults (when lo=hi=0): r in [0,10],
  /// a in [1/2, 1e4].
  double lo = 0.0;
  double hi = 0.0;
  int grid_points = 128;
  double axis_tol = 1e-9;
};

struct MaximizeResult {
  double argmax = 0.0;
  std::string axis;
  StabilizableSolution best;
  /// True when the optimum sits at the upper edge of the search box,
  /// signaling an asymptotic supremum.
  bool boundary_hit = false;
  int evaluations = 0;
};

/// Throws InfeasiblePointError when no feasible point exists in the box.
MaximizeResult run_maximize(const MaximizeRequest& request);

}  // namespace gstab
