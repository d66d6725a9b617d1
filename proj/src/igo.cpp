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

#include "cvgauss/igo.hpp"

#include <random>
#include <sstream>

#include "cvgauss/errors.hpp"
#include "cvgauss/tolerance.hpp"

namespace cvgauss {
namespace {

std::string bound_message(const char* which, double omega, double bound) {
  std::ostringstream os;
  os.precision(17);
  os << which << " violated (omega = " << omega << ", bound = " << bound << ")";
  return os.str();
}

void require_modes(const GaussianState& s, int modes) {
  if (s.modes != modes || s.d.size() != 2 * modes || s.V.rows() != 2 * modes) {
    throw ModeMismatch("channel acts on " + std::to_string(modes) + "-mode states, got " +
                       std::to_string(s.modes));
  }
}

}  // namespace

std::string to_string(IgoType type) { return type == IgoType::I ? "I" : "II"; }

std::optional<std::string> validate_igo1(const OneModeIGO& g) {
  if (!std::isfinite(g.t) || !std::isfinite(g.theta) || !std::isfinite(g.omega)) {
    return "channel parameters must be finite";
  }
  const double bound = g.omega_bound();
  if (g.omega < bound - tolerances().eq) {
    return bound_message(g.reflect ? "omega >= 1 + t^2 (type II)" : "omega >= |1 - t^2| (type I)",
                         g.omega, bound);
  }
  return std::nullopt;
}

OneModeIGO make_igo1(double t, double theta, bool reflect, double omega) {
  OneModeIGO g{t, theta, reflect, omega};
  if (auto why = validate_igo1(g)) throw InvalidChannel(*why);
  return g;
}

IgoType igo1_type(const OneModeIGO& g) { return g.reflect ? IgoType::II : IgoType::I; }

GaussianState apply1(const OneModeIGO& g, const GaussianState& s) {
  require_modes(s, 1);
  const Mat2 t = g.transfer();
  Mat2 v = t * s.V1() * t.transpose() + g.omega * Mat2::Identity();
  v = (v + v.transpose()).eval() / 2.0;
  return GaussianState(Vec2(t * s.d1()), v);
}

OneModeIGO compose1(const OneModeIGO& g2, const OneModeIGO& g1) {
  // With F = diag(1,-1): R(a) F = F R(-a) and F F = I, so O2 O1 is a rotation
  // by theta1 +- theta2, reflected iff exactly one factor reflects.
  OneModeIGO out;
  out.t = g1.t * g2.t;
  out.omega = g2.t * g2.t * g1.omega + g2.omega;
  out.reflect = g1.reflect != g2.reflect;
  out.theta = g1.reflect ? g1.theta - g2.theta : g1.theta + g2.theta;
  return out;
}

Mat4 TwoModeIGO::transfer() const {
  Mat4 t = Mat4::Zero();
  const Mat2 t1 = blocks[0].transfer();
  const Mat2 t2 = blocks[1].transfer();
  if (block_type == IgoType::I) {
    t.topLeftCorner<2, 2>() = t1;
    t.bottomRightCorner<2, 2>() = t2;
  } else {
    t.topRightCorner<2, 2>() = t2;
    t.bottomLeftCorner<2, 2>() = t1;
  }
  return t;
}

Mat4 TwoModeIGO::noise() const {
  Mat4 n = Mat4::Zero();
  n(0, 0) = n(1, 1) = blocks[0].omega;
  n(2, 2) = n(3, 3) = blocks[1].omega;
  return n;
}

double TwoModeIGO::omega_bound(int j) const {
  // Output mode j is fed by block j (type I) or by the other block (type II).
  const IgoBlock& feed = block_type == IgoType::I ? blocks[j] : blocks[1 - j];
  return std::abs(1.0 - feed.t * feed.t * feed.det_o());
}

std::optional<std::string> validate_igo2(const TwoModeIGO& g) {
  for (const IgoBlock& b : g.blocks) {
    if (!std::isfinite(b.t) || !std::isfinite(b.theta) || !std::isfinite(b.omega)) {
      return "channel parameters must be finite";
    }
  }
  const bool type1 = g.block_type == IgoType::I;
  for (int j = 0; j < 2; ++j) {
    const double bound = g.omega_bound(j);
    if (g.blocks[j].omega < bound - tolerances().eq) {
      const int feed = type1 ? j + 1 : 2 - j;
      const std::string which = "omega_" + std::to_string(j + 1) + " >= |1 - t_" +
                                std::to_string(feed) + "^2 det O_" + std::to_string(feed) +
                                "| (type " + to_string(g.block_type) + ")";
      return bound_message(which.c_str(), g.blocks[j].omega, bound);
    }
  }
  return std::nullopt;
}

TwoModeIGO make_igo2(IgoType type, const IgoBlock& block1, const IgoBlock& block2) {
  TwoModeIGO g{type, {block1, block2}};
  if (auto why = validate_igo2(g)) throw InvalidChannel(*why);
  return g;
}

GaussianState apply2(const TwoModeIGO& g, const GaussianState& s) {
  require_modes(s, 2);
  const Mat4 t = g.transfer();
  Mat4 v = t * s.V * t.transpose() + g.noise();
  v = (v + v.transpose()).eval() / 2.0;
  return GaussianState(Vec4(t * s.d), v);
}

bool incoherence_preserved(const OneModeIGO& g, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> nbar(0.0, 5.0);
  for (int i = 0; i < trials; ++i) {
    if (!is_incoherent(apply1(g, make_thermal(nbar(rng))))) return false;
  }
  return true;
}

bool incoherence_preserved(const TwoModeIGO& g, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> nbar(0.0, 5.0);
  for (int i = 0; i < trials; ++i) {
    Mat4 v = Mat4::Zero();
    v.topLeftCorner<2, 2>() = (2.0 * nbar(rng) + 1.0) * Mat2::Identity();
    v.bottomRightCorner<2, 2>() = (2.0 * nbar(rng) + 1.0) * Mat2::Identity();
    if (!is_incoherent(apply2(g, GaussianState(Vec4::Zero(), v)))) return false;
  }
  return true;
}

}  // namespace cvgauss
