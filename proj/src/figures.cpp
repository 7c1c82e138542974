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

#include "gstab/figures.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>

#include "gstab/io.hpp"
#include "gstab/measures.hpp"

namespace gstab {

namespace {

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  }
  return grid;
}

void append_curve(FigureDataset& dataset, const std::string& curve,
                  const std::vector<double>& sweep,
                  const std::function<double(double)>& value) {
  for (double s : sweep) {
    dataset.rows.push_back({s, curve, value(s)});
  }
}

}  // namespace

FigureDataset make_figure(const std::string& id, int points) {
  if (points < 2) {
    throw std::invalid_argument("figure: needs at least 2 points per curve");
  }
  FigureDataset ds;
  ds.figure_id = id;
  ds.metadata.push_back(std::string("gstab ") + kVersion);

  const bool entropy = (id == "1b" || id == "1d" || id == "2b" || id == "3b");
  ds.quantity = entropy ? "S_L" : "E_N";

  if (id == "1a" || id == "1b") {
    ds.sweep_name = "r";
    ds.metadata.push_back(
        "model=local_damping_symmetric gamma=1 sweep=r domain=[0,3] curves=chi");
    static constexpr std::pair<const char*, double> kCurves[] = {
        {"chi=1.0", 1.0}, {"chi=1.2", 1.2}, {"chi=1.6", 1.6}, {"chi=1.9", 1.9}};
    const std::vector<double> sweep = linspace(0.0, 3.0, points);
    for (const auto& [name, chi] : kCurves) {
      append_curve(ds, name, sweep, [&, chi = chi](double r) {
        return entropy ? damping_symmetric_linear_entropy(r, chi)
                       : damping_symmetric_log_negativity(r, chi);
      });
    }
  } else if (id == "1c" || id == "1d") {
    ds.sweep_name = "a";
    ds.metadata.push_back(
        "model=local_damping_equal_occupation sweep=a domain=[chi/2,40] curves=chi");
    static constexpr std::pair<const char*, double> kCurves[] = {
        {"chi=1", 1.0}, {"chi=2", 2.0}, {"chi=4", 4.0}, {"chi=8", 8.0}};
    for (const auto& [name, chi] : kCurves) {
      const std::vector<double> sweep = linspace(std::max(0.5, chi / 2.0), 40.0, points);
      append_curve(ds, name, sweep, [&, chi = chi](double a) {
        return entropy ? damping_equal_occupation_linear_entropy(a, chi)
                       : damping_equal_occupation_log_negativity(a, chi);
      });
    }
  } else if (id == "2a" || id == "2b") {
    ds.sweep_name = "r";
    ds.metadata.push_back("model=squeezed eta=0 sweep=r domain=[0,5] curves=alpha");
    static constexpr std::pair<const char*, double> kCurves[] = {
        {"alpha=0", 0.0}, {"alpha=1", 1.0}, {"alpha=2", 2.0}};
    const std::vector<double> sweep = linspace(0.0, 5.0, points);
    for (const auto& [name, alpha] : kCurves) {
      append_curve(ds, name, sweep, [&, alpha = alpha](double r) {
        return entropy ? squeezed_linear_entropy(r, alpha)
                       : squeezed_log_negativity(r, alpha);
      });
    }
  } else if (id == "3a" || id == "3b") {
    ds.sweep_name = "a";
    ds.metadata.push_back("model=cascaded sweep=a domain=[0.5,20] curves=c_plus rule");
    const std::vector<double> sweep = linspace(0.5, 20.0, points);
    append_curve(ds, "c+=max", sweep, [&](double a) {
      const double cp = cascaded_c_plus_max(a);
      return entropy ? cascaded_linear_entropy(a, cp) : cascaded_log_negativity(a, cp);
    });
    append_curve(ds, "c+=mid", sweep, [&](double a) {
      const double cp = cascaded_c_plus_mid(a);
      return entropy ? cascaded_linear_entropy(a, cp) : cascaded_log_negativity(a, cp);
    });
  } else {
    throw std::invalid_argument("figure: unknown id '" + id + "'");
  }
  return ds;
}

void write_figure_csv(const FigureDataset& dataset, std::ostream& out) {
  for (const std::string& line : dataset.metadata) {
    out << "# " << line << "\n";
  }
  out << "# figure " << dataset.figure_id << "\n";
  out << dataset.sweep_name << ",curve," << dataset.quantity << "\n";
  for (const FigureRow& row : dataset.rows) {
    out << format_double(row.sweep) << "," << row.curve << ","
        << format_double(row.value) << "\n";
  }
}

namespace {

struct ScanPoint {
  std::map<std::string, double> values;
};

double get(const std::map<std::string, double>& m, const std::string& key,
           double fallback) {
  auto it = m.find(key);
  return it == m.end() ? fallback : it->second;
}

void emit_solution_columns(std::vector<double>& row, const StabilizableSolution& sol) {
  row.push_back(sol.standard_form.a);
  row.push_back(sol.standard_form.b);
  row.push_back(sol.standard_form.c_plus);
  row.push_back(sol.standard_form.c_minus);
  row.push_back(sol.log_negativity);
  row.push_back(sol.linear_entropy);
  row.push_back(sol.physical ? 1.0 : 0.0);
  row.push_back(sol.entangled ? 1.0 : 0.0);
}

void emit_residual_columns(std::vector<double>& row, const StabilizableSolution& sol,
                           const LindbladSpec& spec) {
  const StabilizabilityReport report =
      is_stabilizable(build_from_standard_form(sol.standard_form), spec);
  row.push_back(report.relative_residuals[1]);
  row.push_back(report.relative_residuals[3]);
}

}  // namespace

ScanResult run_scan(const ScanRequest& request) {
  if (request.axes.empty()) {
    throw std::invalid_argument("scan: needs at least one axis");
  }
  for (const ScanAxis& axis : request.axes) {
    if (axis.count < 2) {
      throw std::invalid_argument("scan: axis '" + axis.name + "' needs count >= 2");
    }
    if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi) || !(axis.lo <= axis.hi)) {
      throw std::invalid_argument("scan: axis '" + axis.name + "' range invalid");
    }
  }

  // Enumerate grid (row-major over the axes) or seeded uniform samples.
  std::vector<ScanPoint> points;
  if (request.random_samples > 0) {
    std::mt19937_64 rng(request.seed);
    for (int i = 0; i < request.random_samples; ++i) {
      ScanPoint pt;
      for (const ScanAxis& axis : request.axes) {
        std::uniform_real_distribution<double> dist(axis.lo, axis.hi);
        pt.values[axis.name] = dist(rng);
      }
      points.push_back(std::move(pt));
    }
  } else {
    const std::size_t ndim = request.axes.size();
    std::vector<int> idx(ndim, 0);
    while (true) {
      ScanPoint pt;
      for (std::size_t d = 0; d < ndim; ++d) {
        const ScanAxis& axis = request.axes[d];
        pt.values[axis.name] =
            axis.lo + (axis.hi - axis.lo) * idx[d] / double(axis.count - 1);
      }
      points.push_back(std::move(pt));
      std::size_t d = ndim;
      while (d > 0 && ++idx[d - 1] == request.axes[d - 1].count) {
        idx[d - 1] = 0;
        --d;
      }
      if (d == 0) break;
    }
  }

  ScanResult result;
  result.metadata.push_back(std::string("gstab ") + kVersion);
  result.metadata.push_back("model=" + request.model);
  for (const ScanAxis& axis : request.axes) {
    result.columns.push_back(axis.name);
  }
  const std::vector<std::string> solution_cols = {
      "sf_a", "sf_b", "sf_c_plus", "sf_c_minus", "E_N", "S_L", "physical", "entangled"};
  result.columns.insert(result.columns.end(), solution_cols.begin(), solution_cols.end());
  if (request.emit_residuals) {
    result.columns.push_back("g2_rel");
    result.columns.push_back("g4_rel");
  }
  const bool general = request.model == "local_damping_general";
  if (general) result.columns.push_back("branch");

  std::size_t skipped = 0;
  for (const ScanPoint& pt : points) {
    std::vector<double> axis_values;
    for (const ScanAxis& axis : request.axes) {
      axis_values.push_back(pt.values.at(axis.name));
    }
    auto lookup = [&](const std::string& key, double fallback) {
      auto it = pt.values.find(key);
      if (it != pt.values.end()) return it->second;
      return get(request.fixed, key, fallback);
    };
    try {
      if (request.model == "local_damping_symmetric") {
        const double chi = lookup("chi", 1.0);
        const double gamma = lookup("gamma", 1.0);
        const StabilizableSolution sol =
            damping_symmetric_manifold(lookup("r", 0.0), chi, gamma);
        std::vector<double> row = axis_values;
        emit_solution_columns(row, sol);
        if (request.emit_residuals) {
          emit_residual_columns(row, sol,
                                local_damping_spec({1.0, gamma, x0_from_chi(chi)}));
        }
        result.rows.push_back(std::move(row));
      } else if (request.model == "local_damping_equal_occupation") {
        const double chi = lookup("chi", 1.0);
        const StabilizableSolution sol =
            damping_equal_occupation_manifold(lookup("a", 0.5), chi);
        std::vector<double> row = axis_values;
        emit_solution_columns(row, sol);
        if (request.emit_residuals) {
          emit_residual_columns(row, sol, local_damping_spec({1.0, 1.0, x0_from_chi(chi)}));
        }
        result.rows.push_back(std::move(row));
      } else if (general) {
        LocalDampingParams params{lookup("gamma1", 1.0), lookup("gamma2", 1.0),
                                  lookup("x0", 1.0)};
        const auto sols =
            damping_general_solution(lookup("a", 0.5), lookup("b", 0.5), params);
        if (sols.empty()) ++skipped;
        int branch = 0;
        for (const StabilizableSolution& sol : sols) {
          std::vector<double> row = axis_values;
          emit_solution_columns(row, sol);
          if (request.emit_residuals) {
            emit_residual_columns(row, sol, local_damping_spec(params));
          }
          row.push_back(branch++);
          result.rows.push_back(std::move(row));
        }
        continue;
      } else if (request.model == "squeezed") {
        SqueezedDissipatorParams params{lookup("alpha", 0.0), lookup("eta", 0.0)};
        const StabilizableSolution sol = squeezed_manifold(lookup("r", 0.0), params);
        std::vector<double> row = axis_values;
        emit_solution_columns(row, sol);
        if (request.emit_residuals) {
          emit_residual_columns(row, sol, squeezed_dissipator_spec(params));
        }
        result.rows.push_back(std::move(row));
      } else if (request.model == "cascaded") {
        const double a = lookup("a", 0.5);
        double c_plus = 0.0;
        if (pt.values.count("c_plus") || request.fixed.count("c_plus")) {
          c_plus = lookup("c_plus", 0.0);
        } else {
          // c_plus_rule: 0 = max (default), 1 = mid.
          c_plus = lookup("c_plus_rule", 0.0) == 1.0 ? cascaded_c_plus_mid(a)
                                                     : cascaded_c_plus_max(a);
        }
        const StabilizableSolution sol = cascaded_manifold(a, c_plus);
        std::vector<double> row = axis_values;
        emit_solution_columns(row, sol);
        if (request.emit_residuals) {
          emit_residual_columns(row, sol, cascaded_spec({lookup("kappa", 1.0)}));
        }
        result.rows.push_back(std::move(row));
      } else {
        throw std::invalid_argument("scan: unknown model '" + request.model + "'");
      }
    } catch (const InfeasiblePointError&) {
      ++skipped;
    }
  }
  result.metadata.push_back("points=" + std::to_string(points.size()) +
                            " skipped_infeasible=" + std::to_string(skipped));
  return result;
}

void write_scan_csv(const ScanResult& result, std::ostream& out) {
  for (const std::string& line : result.metadata) {
    out << "# " << line << "\n";
  }
  for (std::size_t i = 0; i < result.columns.size(); ++i) {
    out << (i ? "," : "") << result.columns[i];
  }
  out << "\n";
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_double(row[i]);
    }
    out << "\n";
  }
}

}  // namespace gstab
