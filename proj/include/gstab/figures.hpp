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

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gstab/models.hpp"

namespace gstab {

inline constexpr const char* kVersion = "0.1.0";

/// One curve-point record of a figure dataset (long format: each curve keeps
/// its own monotone sweep).
struct FigureRow {
  double sweep = 0.0;
  std::string curve;
  double value = 0.0;
};

struct FigureDataset {
  std::string figure_id;
  std::string sweep_name;  // "r" or "a"
  std::string quantity;    // "E_N" or "S_L"
  std::vector<std::string> metadata;
  std::vector<FigureRow> rows;
};

/// Regenerates the dataset behind one published panel; valid ids are
/// 1a, 1b, 1c, 1d, 2a, 2b, 3a, 3b. Curves are evaluated from the closed-form
/// manifold expressions, `points` samples per curve.
FigureDataset make_figure(const std::string& id, int points = 400);

/// CSV with '#'-prefixed metadata lines, a header row, 17-significant-digit
/// values and LF line endings; byte-deterministic for fixed inputs.
void write_figure_csv(const FigureDataset& dataset, std::ostream& out);

/// A named sweep axis: `count` >= 2 equally spaced points on [lo, hi].
struct ScanAxis {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
};

struct ScanRequest {
  std::string model;  // local_damping_symmetric | local_damping_equal_occupation |
                      // local_damping_general | squeezed | cascaded
  std::vector<ScanAxis> axes;
  std::map<std::string, double> fixed;
  bool emit_residuals = false;
  /// When > 0, draw this many uniform random points from the axis box instead
  /// of the grid (seeded).
  int random_samples = 0;
  unsigned long long seed = 0;
};

struct ScanResult {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> metadata;
};

ScanResult run_scan(const ScanRequest& request);

void write_scan_csv(const ScanResult& result, std::ostream& out);

}  // namespace gstab
