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

#include <string>

#include <json.hpp>

#include "gstab/models.hpp"

namespace gstab {

/// Input could not be parsed / validated (CLI exit code 2).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;

/// 17-significant-digit decimal formatting ("%.17g"), dot separator.
std::string format_double(double value);

/// Accepts either a literal JSON document (first non-space char '{') or a
/// path to a JSON file.
nlohmann::json load_json_text(const std::string& text_or_path);

// State documents: {"schema":1, "a":..,"b":..,"c_plus":..,"c_minus":..}
// or {"schema":1, "matrix":[16 row-major numbers]} (nested 4x4 also accepted).
CovarianceMatrix parse_state(const nlohmann::json& j);

// Dissipator documents: {"schema":1,"model":"local_damping","params":{...}},
// models local_damping {gamma1,gamma2,x0}, squeezed {alpha,eta},
// cascaded {kappa}; or explicit channels
// {"schema":1,"channels":[[[re,im],[re,im],[re,im],[re,im]], ...]}.
LindbladSpec parse_dissipator(const nlohmann::json& j);

// Hamiltonian documents: {"schema":1,"g":[16 row-major]} or
// {"schema":1,"reference":"squeezing"|"cascaded","omega":..}; null / absent
// means G = 0.
QuadraticHamiltonian parse_hamiltonian(const nlohmann::json& j);

nlohmann::json standard_form_to_json(const StandardForm& sf);
nlohmann::json matrix_to_json(const Mat4& m);
nlohmann::json solution_to_json(const StabilizableSolution& s);

/// Serializes with keys ordered, 17-significant-digit numbers, LF newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace gstab
