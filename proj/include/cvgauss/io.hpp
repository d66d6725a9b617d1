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

// JSON (de)serialization of states, channels, decisions and reports.
//
// State file:   {"modes": 1, "d": [..], "V": [[..], ..], "label": ".."}
// Channel file: {"kind": "one-mode", "t", "theta", "reflect", "omega"} or
//               {"kind": "two-mode", "block_type": "I"|"II",
//                "blocks": [{"t", "theta", "reflect", "omega"}, ..]}
// Doubles are written in shortest round-trip form.

#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cvgauss/decide.hpp"
#include "cvgauss/oracle.hpp"
#include "cvgauss/tolerance.hpp"

namespace cvgauss {

using Json = nlohmann::ordered_json;

/// Malformed JSON or a document that does not have the expected shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);
std::string dump_json(const Json& j);

/// Shape-checked but not physicality-checked; see `validate_state`.
GaussianState state_from_json(const Json& j, std::string* label = nullptr);
Json state_to_json(const GaussianState& s, const std::string& label = "");

/// Shape-checked but not bound-checked; see `validate_igo1` / `validate_igo2`.
Witness channel_from_json(const Json& j);
Json channel_to_json(const Witness& w);

Json decision_to_json(const Decision& d);
Json report_to_json(const ConsistencyReport& r);
Json interval_set_to_json(const IntervalSet& s);
Json config_to_json(const SearchConfig& cfg, const Tolerances& tol);

}  // namespace cvgauss
