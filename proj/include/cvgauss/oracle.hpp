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

// Brute-force search for witnessing channels, independent of the closed-form
// decision procedures, plus seeded generators for test instances.
//
// The one-mode search grids (reflect, theta, t) with t in [0, t_max]; the sign
// of t is folded into theta. For each grid point the noise omega is the least
// squares solution of the second-moment equation, clamped up to the validity
// bound. The best local minima of the grid are refined by shrinking grids and
// a final Levenberg-Marquardt polish. The two-mode search grids the block
// feeding output mode 1 the same way and solves the other block, which enters
// the equations linearly as u E1 + v E2, by least squares.
//
// All searches are sequential and deterministic; ties between equal residuals
// go to the lowest grid index.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "cvgauss/igo.hpp"
#include "cvgauss/moments.hpp"

namespace cvgauss {

struct SearchConfig {
  int theta_steps = 720;
  int t_steps = 400;
  double t_max = 4.0;
  int refine_rounds = 3;
  double tol = 1e-6;
  int candidates = 8;  // grid local minima handed to refinement
  /// Restrict the search to channels with at least one reflecting block.
  bool reflections_only = false;

  /// Reason the configuration is unusable, or nullopt.
  std::optional<std::string> check() const;
};

struct OracleResult1 {
  std::optional<OneModeIGO> channel;
  double residual = 0.0;  // best residual seen (of `channel` when found)
};

struct OracleResult2 {
  std::optional<TwoModeIGO> channel;
  double residual = 0.0;
};

OracleResult1 oracle_search1(const GaussianState& rho, const GaussianState& sigma,
                             const SearchConfig& cfg = {});
OracleResult2 oracle_search2(const GaussianState& rho, const GaussianState& sigma,
                             const SearchConfig& cfg = {});

enum class Mixedness { pure, mixed, any };

/// Pure: displaced squeezed state with |alpha|, |beta| <= 2.
/// Mixed: standard form with nbar in [0.01, 3] (det V >= 1.0404).
GaussianState random_state1(Mixedness mixedness, std::uint64_t seed);
/// Coherent state with 0.1 <= |alpha| <= 2.
GaussianState random_coherent(std::uint64_t seed);
/// Two-mode squeezed state in standard form, scaled by a thermal factor
/// nu in [1.05, 3] when `pure` is false; random first moment.
GaussianState random_state2_standard(bool pure, std::uint64_t seed);

OneModeIGO random_igo1(IgoType type, std::uint64_t seed);
TwoModeIGO random_igo2(IgoType type, std::uint64_t seed);

enum class ForwardKind {
  one_mode_type1,
  one_mode_type2,
  two_mode_type1,
  /// Pure standard-form source and a unit-gain type I or II channel with
  /// opposite block angles, so the target is pure and in standard form.
  two_mode_pure_standard,
};

struct ForwardInstance {
  GaussianState rho;
  std::variant<OneModeIGO, TwoModeIGO> channel;
  GaussianState sigma;
};

/// sigma = channel(rho) exactly; a guaranteed-convertible triplet.
ForwardInstance forward_instance(ForwardKind kind, std::uint64_t seed);

}  // namespace cvgauss
