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

// Incoherent Gaussian operations (IGOs). A one-mode IGO acts on moments as
//
//   d -> T d,   V -> T V T^t + omega I,   T = t O,
//
// with O orthogonal and omega >= |t^2 det O - 1|. Two-mode IGOs place one
// scaled orthogonal block per input mode, either on the block diagonal
// (type I) or the anti-diagonal (type II).

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "cvgauss/linalg.hpp"
#include "cvgauss/moments.hpp"

namespace cvgauss {

enum class IgoType { I, II };

std::string to_string(IgoType type);

struct OneModeIGO {
  double t = 1.0;
  double theta = 0.0;    // unnormalized; compare channels by their action
  bool reflect = false;  // O = diag(1,-1) R(theta) when set, else R(theta)
  double omega = 0.0;

  double det_o() const { return reflect ? -1.0 : 1.0; }
  Mat2 orthogonal_part() const { return orthogonal(theta, reflect); }
  Mat2 transfer() const { return t * orthogonal_part(); }
  /// Smallest admissible noise |t^2 det O - 1|.
  double omega_bound() const { return std::abs(t * t * det_o() - 1.0); }
};

/// Why a one-mode channel is unphysical, or nullopt.
std::optional<std::string> validate_igo1(const OneModeIGO& g);

/// Validated construction; throws InvalidChannel naming the violated bound.
OneModeIGO make_igo1(double t, double theta, bool reflect, double omega);

IgoType igo1_type(const OneModeIGO& g);

GaussianState apply1(const OneModeIGO& g, const GaussianState& s);

/// The channel equal to applying g1 and then g2.
OneModeIGO compose1(const OneModeIGO& g2, const OneModeIGO& g1);

/// One block of a two-mode IGO. t, theta and reflect describe the scaled
/// orthogonal block t_j O_j acting on input mode j; omega is the noise added
/// on output mode j.
struct IgoBlock {
  double t = 1.0;
  double theta = 0.0;
  bool reflect = false;
  double omega = 0.0;

  double det_o() const { return reflect ? -1.0 : 1.0; }
  Mat2 transfer() const { return t * orthogonal(theta, reflect); }
};

struct TwoModeIGO {
  IgoType block_type = IgoType::I;
  std::array<IgoBlock, 2> blocks;

  /// Transfer matrix: diag(t1 O1, t2 O2) for type I and
  /// [[0, t2 O2], [t1 O1, 0]] for type II.
  Mat4 transfer() const;
  Mat4 noise() const;
  /// Lower bound on omega for output mode j (0-based).
  double omega_bound(int j) const;
};

std::optional<std::string> validate_igo2(const TwoModeIGO& g);
TwoModeIGO make_igo2(IgoType type, const IgoBlock& block1, const IgoBlock& block2);
GaussianState apply2(const TwoModeIGO& g, const GaussianState& s);

/// Applies g to `trials` random (tensor products of) thermal states and
/// reports whether every output is incoherent.
bool incoherence_preserved(const OneModeIGO& g, int trials, std::uint64_t seed = 7);
bool incoherence_preserved(const TwoModeIGO& g, int trials, std::uint64_t seed = 7);

}  // namespace cvgauss
