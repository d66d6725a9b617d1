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

#include "cvgauss/corpus.hpp"

#include <cmath>

#include "cvgauss/igo.hpp"
#include "cvgauss/oracle.hpp"

namespace cvgauss {
namespace {

GaussianState one_mode(double d0, double d1, double v00, double v01, double v11) {
  Mat2 v;
  v << v00, v01, v01, v11;
  return GaussianState(Vec2(d0, d1), v);
}

}  // namespace

std::vector<CorpusPair> builtin_corpus(std::uint64_t seed) {
  std::vector<CorpusPair> c;
  const GaussianState squeezed = make_displaced_squeezed({0.5, -0.3}, {0.4, 0.2});
  c.push_back({"coherent 1 -> coherent i", make_coherent({1, 0}), make_coherent({0, 1}), ""});
  c.push_back({"coherent 1 -> coherent 2", make_coherent({1, 0}), make_coherent({2, 0}), ""});
  c.push_back({"squeezed -> rotated copy", squeezed,
               apply1(OneModeIGO{1.0, 0.7, false, 0.0}, squeezed), ""});
  c.push_back({"squeezed -> vacuum", squeezed, make_vacuum(), ""});
  c.push_back({"thermal 1 -> coherent 1", make_thermal(1.0), make_coherent({1, 0}), ""});
  c.push_back({"squeezed thermal -> thermal 2", apply1(OneModeIGO{1.0, 0.0, false, 0.5}, squeezed),
               make_thermal(2.0), ""});
  c.push_back({"type I forward (t^2 = 1/2)", one_mode(1, 0, 2, 0, 1),
               one_mode(1 / std::sqrt(2.0), 0, 1.5, 0, 1), ""});
  c.push_back({"type II forward (t^2 = 1/2)", one_mode(1, 0, 2, 0, 1),
               one_mode(1 / std::sqrt(2.0), 0, 2.5, 0, 2), ""});
  c.push_back({"norm match, direction mismatch", one_mode(1, 0, 2, 0, 1),
               one_mode(0, 1 / std::sqrt(2.0), 1.5, 0, 1), "A"});
  c.push_back({"norm match, direction mismatch (type II)", one_mode(1, 0, 2, 0, 1),
               one_mode(0, 1 / std::sqrt(2.0), 2.5, 0, 2), "A"});
  for (int k = 0; k < 3; ++k) {
    const auto kind = k % 2 == 0 ? ForwardKind::one_mode_type1 : ForwardKind::one_mode_type2;
    const ForwardInstance f = forward_instance(kind, seed + k);
    c.push_back({"random one-mode forward #" + std::to_string(k), f.rho, f.sigma, ""});
  }

  const GaussianState tmsv1 = make_two_mode_standard(tmsv_form(1.0));
  const GaussianState tmsv05 = make_two_mode_standard(tmsv_form(0.5));
  const GaussianState tmsv06 = make_two_mode_standard(tmsv_form(0.6));
  c.push_back({"TMSV(0.6) -> itself", tmsv06, tmsv06, ""});
  c.push_back({"TMSV(1) -> TMSV(0.5)", tmsv1, tmsv05, "B"});
  c.push_back({"TMSV(0.5) -> TMSV(1)", tmsv05, tmsv1, ""});
  for (int k = 0; k < 2; ++k) {
    const ForwardInstance f = forward_instance(ForwardKind::two_mode_pure_standard, seed + 10 + k);
    c.push_back({"random two-mode pure forward #" + std::to_string(k), f.rho, f.sigma, ""});
  }
  return c;
}

}  // namespace cvgauss
