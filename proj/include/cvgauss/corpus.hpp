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

// Fixed set of source/target pairs used by `cvgauss report --builtin` and the
// acceptance suite. It covers every decision path, including the two known
// divergence classes between the published conditions and the solvers.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvgauss/moments.hpp"

namespace cvgauss {

struct CorpusPair {
  std::string label;
  GaussianState source;
  GaussianState target;
  /// Divergence class the pair is expected to show ("" when consistent).
  std::string expected_divergence;
};

std::vector<CorpusPair> builtin_corpus(std::uint64_t seed);

}  // namespace cvgauss
