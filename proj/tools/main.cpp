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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gstab/figures.hpp"
#include "gstab/io.hpp"
#include "gstab/maximize.hpp"
#include "gstab/measures.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegativeFinding = 1;
constexpr int kExitUsage = 2;

double default_tolerance() {
  if (const char* env = std::getenv("GAUSS_STAB_TOL")) {
    try {
      const double tol = std::stod(env);
      if (tol > 0.0) return tol;
    } catch (...) {
    }
    std::cerr << "warning: ignoring invalid GAUSS_STAB_TOL\n";
  }
  return gstab::kDefaultStabilizabilityTol;
}

// --out writes to a file, otherwise stdout.
void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw gstab::ParseError("cannot open output file '" + out_path + "'");
  }
  out << content;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, double> params;
  for (const std::string& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw gstab::ParseError("--param expects name=value, got '" + kv + "'");
    }
    params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
  }
  return params;
}

std::vector<gstab::ScanAxis> parse_ranges(const std::vector<std::string>& ranges) {
  std::vector<gstab::ScanAxis> axes;
  for (const std::string& spec : ranges) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
      throw gstab::ParseError("--range expects name=lo:hi:count, got '" + spec + "'");
    }
    gstab::ScanAxis axis;
    axis.name = spec.substr(0, eq);
    const std::string rest = spec.substr(eq + 1);
    const auto c1 = rest.find(':');
    const auto c2 = rest.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw gstab::ParseError("--range expects name=lo:hi:count, got '" + spec + "'");
    }
    axis.lo = std::stod(rest.substr(0, c1));
    axis.hi = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
    axis.count = std::stoi(rest.substr(c2 + 1));
    axes.push_back(axis);
  }
  return axes;
}

int cmd_check(const std::string& state_text, const std::string& dissipator_text,
              double tol) {
  const gstab::CovarianceMatrix v = gstab::parse_state(gstab::load_json_text(state_text));
  const gstab::LindbladSpec d =
      gstab::parse_dissipator(gstab::load_json_text(dissipator_text));

  const gstab::PhysicalityReport phys = gstab::check_physical(v);
  std::cout << "physical: " << (phys.physical ? "yes" : "no") << "\n";
  std::cout << "  h1: " << gstab::format_double(phys.h1) << "\n";
  std::cout << "  h2: " << gstab::format_double(phys.h2) << "\n";

  const gstab::StabilizabilityReport report = gstab::is_stabilizable(v, d, tol);
  for (int k = 1; k <= 4; ++k) {
    std::cout << "residual k=" << k << ": " << gstab::format_double(report.residuals[k - 1])
              << " (relative " << gstab::format_double(report.relative_residuals[k - 1])
              << ")\n";
  }
  std::cout << "stabilizable: " << (report.stabilizable ? "yes" : "no")
            << " (tolerance " << gstab::format_double(tol) << ")\n";

  if (phys.physical) {
    const gstab::CovarianceMatrix state = v;
    std::cout << "E_N: " << gstab::format_double(gstab::log_negativity(state)) << "\n";
    std::cout << "S_L: " << gstab::format_double(gstab::linear_entropy(state)) << "\n";
  } else {
    std::cout << "E_N: undefined (unphysical state)\n";
    std::cout << "S_L: undefined (unphysical state)\n";
  }
  return (phys.physical && report.stabilizable) ? kExitOk : kExitNegativeFinding;
}

int cmd_figure(const std::string& id, int points, const std::string& out_path) {
  const gstab::FigureDataset ds = gstab::make_figure(id, points);
  std::ostringstream csv;
  gstab::write_figure_csv(ds, csv);
  emit(out_path, csv.str());
  return kExitOk;
}

int cmd_maximize(const std::string& model, const std::vector<std::string>& params,
                 double lo, double hi, int points, const std::string& out_path) {
  gstab::MaximizeRequest request;
  request.model = model;
  request.params = parse_params(params);
  request.lo = lo;
  request.hi = hi;
  request.grid_points = points > 1 ? points : 128;
  const gstab::MaximizeResult result = gstab::run_maximize(request);
  nlohmann::json j{{"schema", gstab::kSchemaVersion},
                   {"model", model},
                   {"axis", result.axis},
                   {"argmax", result.argmax},
                   {"boundary_hit", result.boundary_hit},
                   {"evaluations", result.evaluations},
                   {"best", gstab::solution_to_json(result.best)}};
  emit(out_path, gstab::dump_json(j));
  return kExitOk;
}

int cmd_evolve(const std::string& state_text, const std::string& dissipator_text,
               const std::string& hamiltonian_text, double horizon, double step,
               double output_interval, const std::string& out_path) {
  const gstab::CovarianceMatrix v0 = gstab::parse_state(gstab::load_json_text(state_text));
  gstab::LindbladSpec d;
  if (!dissipator_text.empty()) {
    d = gstab::parse_dissipator(gstab::load_json_text(dissipator_text));
  }
  gstab::QuadraticHamiltonian h;
  if (!hamiltonian_text.empty()) {
    h = gstab::parse_hamiltonian(gstab::load_json_text(hamiltonian_text));
  }
  gstab::EvolutionConfig cfg;
  cfg.step = step;
  cfg.horizon = horizon;
  if (output_interval <= 0.0) output_interval = horizon / 100.0;

  const gstab::TrajectoryResult trajectory =
      gstab::evolve_trajectory(v0, h, d, cfg, output_interval);

  std::ostringstream csv;
  csv << "# gstab " << gstab::kVersion << "\n";
  csv << "t,a,b,c_plus,c_minus,E_N,S_L\n";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const gstab::TrajectorySample& sample : trajectory.samples) {
    // Rows survive even when a state is too extreme for the reduction or the
    // measures (entries near the divergence guard).
    gstab::StandardForm sf{nan, nan, nan, nan};
    double en = nan, sl = nan;
    try {
      const gstab::CovarianceMatrix v{sample.v};
      sf = gstab::to_standard_form(v);
      if (gstab::check_physical(v).physical) {
        en = gstab::log_negativity(v);
        sl = gstab::linear_entropy(v);
      }
    } catch (const std::exception&) {
    }
    csv << gstab::format_double(sample.t) << "," << gstab::format_double(sf.a) << ","
        << gstab::format_double(sf.b) << "," << gstab::format_double(sf.c_plus) << ","
        << gstab::format_double(sf.c_minus) << "," << gstab::format_double(en) << ","
        << gstab::format_double(sl) << "\n";
  }
  emit(out_path, csv.str());
  if (trajectory.diverged) {
    std::cerr << "evolve: diverged at t=" << gstab::format_double(trajectory.diverged_at)
              << " after " << trajectory.samples.size() << " good rows\n";
    return kExitNegativeFinding;
  }
  return kExitOk;
}

int cmd_reconstruct(const std::string& state_text, const std::string& dissipator_text,
                    double tol, const std::string& out_path) {
  const gstab::CovarianceMatrix v = gstab::parse_state(gstab::load_json_text(state_text));
  const gstab::LindbladSpec d =
      gstab::parse_dissipator(gstab::load_json_text(dissipator_text));
  const gstab::ReconstructionResult result = gstab::reconstruct_hamiltonian(v, d, tol);
  nlohmann::json j{{"schema", gstab::kSchemaVersion},
                   {"g", gstab::matrix_to_json(result.g.generator())},
                   {"residual", result.residual},
                   {"solvable", result.solvable}};
  emit(out_path, gstab::dump_json(j));
  return result.solvable ? kExitOk : kExitNegativeFinding;
}

int cmd_scan(const std::string& model, const std::vector<std::string>& ranges,
             const std::vector<std::string>& params, bool residuals, int random_samples,
             unsigned long long seed, const std::string& out_path) {
  gstab::ScanRequest request;
  request.model = model;
  request.axes = parse_ranges(ranges);
  request.fixed = parse_params(params);
  request.emit_residuals = residuals;
  request.random_samples = random_samples;
  request.seed = seed;
  const gstab::ScanResult result = gstab::run_scan(request);
  std::ostringstream csv;
  gstab::write_scan_csv(result, csv);
  emit(out_path, csv.str());
  return result.rows.empty() ? kExitNegativeFinding : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode Gaussian covariance algebra, quadratic-Lindblad dynamics,\n"
               "and Hamiltonian-independent stabilizability analysis"};
  app.require_subcommand(1);

  std::string state_text, dissipator_text, hamiltonian_text, out_path, model, figure_id;
  std::vector<std::string> params, ranges;
  double tol = default_tolerance();
  double lo = 0.0, hi = 0.0, horizon = 10.0, step = 1e-3, output_interval = 0.0;
  int points = 0, random_samples = 0;
  unsigned long long seed = 0;
  bool residuals = false;

  CLI::App* check = app.add_subcommand("check", "physicality + stabilizability report");
  check->add_option("--state", state_text, "state JSON (inline or path)")->required();
  check->add_option("--dissipator", dissipator_text, "dissipator JSON (inline or path)")
      ->required();
  check->add_option("--tol", tol, "stabilizability tolerance");

  CLI::App* figure = app.add_subcommand("figure", "regenerate a published-figure dataset");
  figure->add_option("id", figure_id, "one of 1a 1b 1c 1d 2a 2b 3a 3b")->required();
  figure->add_option("--points", points, "samples per curve (default 400)");
  figure->add_option("--out", out_path, "output CSV path (default stdout)");

  CLI::App* maximize =
      app.add_subcommand("maximize", "maximize E_N over a stabilizable manifold");
  maximize->add_option("--model", model, "manifold tag")->required();
  maximize->add_option("--param", params, "fixed parameter name=value");
  maximize->add_option("--lo", lo, "search box lower edge");
  maximize->add_option("--hi", hi, "search box upper edge");
  maximize->add_option("--points", points, "coarse grid size (default 128)");
  maximize->add_option("--out", out_path, "output JSON path");

  CLI::App* evolve = app.add_subcommand("evolve", "integrate the covariance evolution");
  evolve->add_option("--state", state_text, "initial state JSON")->required();
  evolve->add_option("--dissipator", dissipator_text, "dissipator JSON (optional)");
  evolve->add_option("--hamiltonian", hamiltonian_text, "hamiltonian JSON (optional)");
  evolve->add_option("--horizon", horizon, "total evolution time")->required();
  evolve->add_option("--step", step, "integrator step")->required();
  evolve->add_option("--output-interval", output_interval,
                     "time between CSV rows (default horizon/100)");
  evolve->add_option("--out", out_path, "output CSV path");

  CLI::App* reconstruct =
      app.add_subcommand("reconstruct", "solve for a stabilizing Hamiltonian");
  reconstruct->add_option("--state", state_text, "state JSON")->required();
  reconstruct->add_option("--dissipator", dissipator_text, "dissipator JSON")->required();
  reconstruct->add_option("--tol", tol, "solvability tolerance");
  reconstruct->add_option("--out", out_path, "output JSON path");

  CLI::App* scan = app.add_subcommand("scan", "sweep a manifold over a parameter grid");
  scan->add_option("--model", model, "manifold tag")->required();
  scan->add_option("--range", ranges, "swept axis name=lo:hi:count")->required();
  scan->add_option("--param", params, "fixed parameter name=value");
  scan->add_flag("--emit-residuals", residuals, "append relative condition residuals");
  scan->add_option("--random", random_samples, "random samples instead of the grid");
  scan->add_option("--seed", seed, "seed for --random");
  scan->add_option("--out", out_path, "output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(state_text, dissipator_text, tol);
    if (*figure) return cmd_figure(figure_id, points > 1 ? points : 400, out_path);
    if (*maximize) return cmd_maximize(model, params, lo, hi, points, out_path);
    if (*evolve)
      return cmd_evolve(state_text, dissipator_text, hamiltonian_text, horizon, step,
                        output_interval, out_path);
    if (*reconstruct) return cmd_reconstruct(state_text, dissipator_text, tol, out_path);
    if (*scan)
      return cmd_scan(model, ranges, params, residuals, random_samples, seed, out_path);
  } catch (const gstab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gstab::InfeasiblePointError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegativeFinding;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegativeFinding;
  }
  return kExitUsage;
}
