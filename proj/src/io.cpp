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

#include "gstab/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gstab {

using nlohmann::json;

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

void check_schema(const json& j, const char* what) {
  if (!j.is_object()) {
    throw ParseError(std::string(what) + ": expected a JSON object");
  }
  if (j.contains("schema") && j.at("schema") != kSchemaVersion) {
    throw ParseError(std::string(what) + ": unsupported schema version");
  }
}

double number_at(const json& j, const char* key, const char* what) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw ParseError(std::string(what) + ": missing numeric field '" + key + "'");
  }
  return j.at(key).get<double>();
}

Mat4 matrix_from_json(const json& m, const char* what) {
  Mat4 out;
  if (m.is_array() && m.size() == 16) {
    for (int i = 0; i < 16; ++i) {
      if (!m[i].is_number()) throw ParseError(std::string(what) + ": matrix entry not a number");
      out(i / 4, i % 4) = m[i].get<double>();
    }
    return out;
  }
  if (m.is_array() && m.size() == 4) {
    for (int r = 0; r < 4; ++r) {
      if (!m[r].is_array() || m[r].size() != 4) {
        throw ParseError(std::string(what) + ": expected 4 rows of 4 numbers");
      }
      for (int c = 0; c < 4; ++c) out(r, c) = m[r][c].get<double>();
    }
    return out;
  }
  throw ParseError(std::string(what) + ": matrix must be 16 numbers row-major or 4x4 rows");
}

}  // namespace

json load_json_text(const std::string& text_or_path) {
  std::string content = text_or_path;
  const auto first = text_or_path.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw ParseError("input: empty document");
  }
  if (text_or_path[first] != '{' && text_or_path[first] != '[') {
    std::ifstream in(text_or_path);
    if (!in) {
      throw ParseError("input: cannot open file '" + text_or_path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    content = buffer.str();
  }
  json j = json::parse(content, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError("input: invalid JSON");
  }
  return j;
}

CovarianceMatrix parse_state(const json& j) {
  check_schema(j, "state");
  try {
    if (j.contains("matrix")) {
      return CovarianceMatrix(matrix_from_json(j.at("matrix"), "state"));
    }
    StandardForm sf;
    sf.a = number_at(j, "a", "state");
    sf.b = number_at(j, "b", "state");
    sf.c_plus = number_at(j, "c_plus", "state");
    sf.c_minus = number_at(j, "c_minus", "state");
    return build_from_standard_form(sf);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("state: ") + e.what());
  }
}

LindbladSpec parse_dissipator(const json& j) {
  check_schema(j, "dissipator");
  if (j.contains("channels")) {
    const json& chans = j.at("channels");
    if (!chans.is_array() || chans.empty()) {
      throw ParseError("dissipator: 'channels' must be a nonempty array");
    }
    std::vector<Vec4c> vectors;
    for (const json& ch : chans) {
      if (!ch.is_array() || ch.size() != 4) {
        throw ParseError("dissipator: each channel needs 4 [re,im] pairs");
      }
      Vec4c v;
      for (int i = 0; i < 4; ++i) {
        if (!ch[i].is_array() || ch[i].size() != 2) {
          throw ParseError("dissipator: coefficient must be an [re,im] pair");
        }
        v(i) = std::complex<double>(ch[i][0].get<double>(), ch[i][1].get<double>());
      }
      vectors.push_back(v);
    }
    return LindbladSpec(std::move(vectors));
  }

  if (!j.contains("model") || !j.at("model").is_string()) {
    throw ParseError("dissipator: needs 'model' or 'channels'");
  }
  const std::string model = j.at("model").get<std::string>();
  const json params = j.contains("params") ? j.at("params") : json::object();
  try {
    if (model == "local_damping") {
      return local_damping_spec({number_at(params, "gamma1", "dissipator"),
                                 number_at(params, "gamma2", "dissipator"),
                                 params.contains("x0") ? params.at("x0").get<double>() : 1.0});
    }
    if (model == "squeezed") {
      return squeezed_dissipator_spec(
          {number_at(params, "alpha", "dissipator"),
           params.contains("eta") ? params.at("eta").get<double>() : 0.0});
    }
    if (model == "cascaded") {
      return cascaded_spec({number_at(params, "kappa", "dissipator")});
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("dissipator: ") + e.what());
  }
  throw ParseError("dissipator: unknown model '" + model + "'");
}

QuadraticHamiltonian parse_hamiltonian(const json& j) {
  if (j.is_null()) return QuadraticHamiltonian::zero();
  check_schema(j, "hamiltonian");
  try {
    if (j.contains("g")) {
      return QuadraticHamiltonian(matrix_from_json(j.at("g"), "hamiltonian"));
    }
    if (j.contains("reference")) {
      const std::string tag = j.at("reference").get<std::string>();
      const double omega = number_at(j, "omega", "hamiltonian");
      if (tag == "squeezing") return reference_hamiltonian(ReferenceModel::kSqueezing, omega);
      if (tag == "cascaded") return reference_hamiltonian(ReferenceModel::kCascaded, omega);
      throw ParseError("hamiltonian: unknown reference '" + tag + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("hamiltonian: ") + e.what());
  }
  throw ParseError("hamiltonian: needs 'g' or 'reference'");
}

json standard_form_to_json(const StandardForm& sf) {
  return json{{"schema", kSchemaVersion},
              {"a", sf.a},
              {"b", sf.b},
              {"c_plus", sf.c_plus},
              {"c_minus", sf.c_minus}};
}

json matrix_to_json(const Mat4& m) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

json solution_to_json(const StabilizableSolution& s) {
  return json{{"standard_form", standard_form_to_json(s.standard_form)},
              {"log_negativity", s.log_negativity},
              {"linear_entropy", s.linear_entropy},
              {"physical", s.physical},
              {"entangled", s.entangled}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gstab
