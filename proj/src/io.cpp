// Copyright 2026 The cvgauss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvgauss/io.hpp"

#include <fstream>
#include <sstream>

namespace cvgauss {
namespace {

double number(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number()) throw ParseError(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

bool flag(const Json& j, const char* key) {
  if (!j.contains(key)) return false;
  const Json& v = j.at(key);
  if (!v.is_boolean()) throw ParseError(std::string("field \"") + key + "\" must be a boolean");
  return v.get<bool>();
}

double entry(const Json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + " must be a number");
  return v.get<double>();
}

IgoBlock block_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("channel block must be an object");
  return IgoBlock{number(j, "t"), number(j, "theta"), flag(j, "reflect"), number(j, "omega")};
}

Json block_to_json(double t, double theta, bool reflect, double omega) {
  Json j;
  j["t"] = t;
  j["theta"] = theta;
  j["reflect"] = reflect;
  j["omega"] = omega;
  return j;
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

GaussianState state_from_json(const Json& j, std::string* label) {
  if (!j.is_object()) throw ParseError("state must be a JSON object");
  if (!j.contains("modes") || !j.at("modes").is_number_integer()) {
    throw ParseError("field \"modes\" must be an integer");
  }
  const int modes = j.at("modes").get<int>();
  if (modes != 1 && modes != 2) throw ParseError("field \"modes\" must be 1 or 2");
  const int n = 2 * modes;
  if (!j.contains("d") || !j.at("d").is_array() || static_cast<int>(j.at("d").size()) != n) {
    throw ParseError("field \"d\" must be an array of " + std::to_string(n) + " numbers");
  }
  if (!j.contains("V") || !j.at("V").is_array() || static_cast<int>(j.at("V").size()) != n) {
    throw ParseError("field \"V\" must be a " + std::to_string(n) + "x" + std::to_string(n) +
                     " array");
  }
  GaussianState s;
  s.modes = modes;
  s.d = VecN(n);
  s.V = MatN(n, n);
  for (int i = 0; i < n; ++i) {
    s.d(i) = entry(j.at("d").at(i), "d[" + std::to_string(i) + "]");
    const Json& row = j.at("V").at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ParseError("V row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    }
    for (int k = 0; k < n; ++k) {
      s.V(i, k) = entry(row.at(k), "V[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
  }
  if (label) *label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : "";
  return s;
}

Json state_to_json(const GaussianState& s, const std::string& label) {
  Json j;
  j["modes"] = s.modes;
  j["d"] = Json::array();
  for (Eigen::Index i = 0; i < s.d.size(); ++i) j["d"].push_back(s.d(i));
  j["V"] = Json::array();
  for (Eigen::Index i = 0; i < s.V.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < s.V.cols(); ++k) row.push_back(s.V(i, k));
    j["V"].push_back(row);
  }
  if (!label.empty()) j["label"] = label;
  return j;
}

Witness channel_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("channel must be a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    throw ParseError("field \"kind\" must be \"one-mode\" or \"two-mode\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "one-mode") {
    return OneModeIGO{number(j, "t"), number(j, "theta"), flag(j, "reflect"), number(j, "omega")};
  }
  if (kind != "two-mode") throw ParseError("field \"kind\" must be \"one-mode\" or \"two-mode\"");
  TwoModeIGO g;
  const std::string type = j.value("block_type", std::string());
  if (type == "I") {
    g.block_type = IgoType::I;
  } else if (type == "II") {
    g.block_type = IgoType::II;
  } else {
    throw ParseError("field \"block_type\" must be \"I\" or \"II\"");
  }
  if (!j.contains("blocks") || !j.at("blocks").is_array() || j.at("blocks").size() != 2) {
    throw ParseError("field \"blocks\" must be an array of two blocks");
  }
  for (int k = 0; k < 2; ++k) g.blocks[k] = block_from_json(j.at("blocks").at(k));
  return g;
}

Json channel_to_json(const Witness& w) {
  if (const auto* g = std::get_if<OneModeIGO>(&w)) {
    Json j;
    j["kind"] = "one-mode";
    j["t"] = g->t;
    j["theta"] = g->theta;
    j["reflect"] = g->reflect;
    j["omega"] = g->omega;
    j["type"] = to_string(igo1_type(*g));
    return j;
  }
  if (const auto* g = std::get_if<TwoModeIGO>(&w)) {
    Json j;
    j["kind"] = "two-mode";
    j["block_type"] = to_string(g->block_type);
    j["blocks"] = Json::array();
    for (const IgoBlock& b : g->blocks) j["blocks"].push_back(block_to_json(b.t, b.theta, b.reflect, b.omega));
    return j;
  }
  return nullptr;
}

Json decision_to_json(const Decision& d) {
  Json j;
  j["verdict"] = to_string(d.verdict);
  j["rationale"] = d.rationale;
  j["witness"] = channel_to_json(d.witness);
  j["witness_residual"] = finite_or_null(d.witness_residual);
  j["notes"] = d.notes;
  return j;
}

Json report_to_json(const ConsistencyReport& r) {
  Json j;
  j["label"] = r.label;
  j["modes"] = r.modes;
  j["published"] = to_string(r.published);
  j["published_basis"] = r.published_basis;
  j["solver"] = to_string(r.solver);
  j["solver_rationale"] = r.solver_rationale;
  j["oracle_found"] = r.oracle_found;
  j["oracle_residual"] = finite_or_null(r.oracle_residual);
  j["divergence"] = r.divergence.empty() ? Json(nullptr) : Json(r.divergence);
  j["notes"] = r.notes;
  return j;
}

Json interval_set_to_json(const IntervalSet& s) {
  auto one = [](const Interval& i) {
    Json j;
    j["tag"] = i.tag;
    j["lo"] = finite_or_null(i.lo);
    j["hi"] = finite_or_null(i.hi);
    j["empty"] = i.empty();
    return j;
  };
  Json j;
  j["alpha"] = s.alpha;
  j["intervals"] = Json::array();
  for (const Interval& i : s.intervals) j["intervals"].push_back(one(i));
  j["interval2_derived"] = one(s.interval2_derived);
  j["nonempty"] = s.nonempty();
  j["derived_nonempty"] = s.derived_nonempty();
  return j;
}

Json config_to_json(const SearchConfig& cfg, const Tolerances& tol) {
  Json j;
  j["tol_sym"] = tol.sym;
  j["tol"] = tol.eq;
  j["theta_steps"] = cfg.theta_steps;
  j["t_steps"] = cfg.t_steps;
  j["t_max"] = cfg.t_max;
  j["refine_rounds"] = cfg.refine_rounds;
  j["oracle_tol"] = cfg.tol;
  j["candidates"] = cfg.candidates;
  j["reflections_only"] = cfg.reflections_only;
  return j;
}

}  // namespace cvgauss
