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

#include <gtest/gtest.h>

#include "cvgauss/errors.hpp"
#include "cvgauss/oracle.hpp"
#include "cvgauss/tolerance.hpp"

namespace cvgauss {
namespace {

TEST(SearchConfig, Checks) {
  EXPECT_FALSE(SearchConfig{}.check());
  SearchConfig c;
  c.theta_steps = 0;
  EXPECT_TRUE(c.check());
  c = SearchConfig{};
  c.tol = 1e-20;
  EXPECT_TRUE(c.check());
  c = SearchConfig{};
  c.t_max = -1;
  EXPECT_TRUE(c.check());
  EXPECT_THROW(oracle_search1(make_vacuum(), make_vacuum(), c), std::invalid_argument);
}

TEST(Oracle1, FindsForwardChannels) {
  int found = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ForwardInstance f = forward_instance(
        seed % 2 ? ForwardKind::one_mode_type1 : ForwardKind::one_mode_type2, seed);
    const OracleResult1 r = oracle_search1(f.rho, f.sigma);
    if (!r.channel) continue;
    ++found;
    EXPECT_FALSE(validate_igo1(*r.channel));
    EXPECT_LT(moment_residual(apply1(*r.channel, f.rho), f.sigma), SearchConfig{}.tol);
  }
  EXPECT_GE(found, 198);
}

TEST(Oracle1, CoherentAmplitudeMismatch) {
  const OracleResult1 r = oracle_search1(make_coherent({1, 0}), make_coherent({2, 0}));
  EXPECT_FALSE(r.channel);
  EXPECT_GT(r.residual, 0.1);
}

TEST(Oracle1, ResetToThermal) {
  const GaussianState s = random_state1(Mixedness::mixed, 9);
  const OracleResult1 r = oracle_search1(s, make_thermal(1.5));
  ASSERT_TRUE(r.channel);
  EXPECT_NEAR(r.channel->t, 0.0, 1e-6);
  EXPECT_NEAR(r.channel->omega, 4.0, 1e-6);
}

TEST(Oracle1, ModeMismatch) {
  EXPECT_THROW(oracle_search1(make_vacuum(), make_two_mode_standard({1, 1, 0, 0})), ModeMismatch);
}

TEST(Oracle2, IdentityPair) {
  const GaussianState s = make_two_mode_standard(tmsv_form(0.3), Vec4(0.2, 0, -1, 0.5));
  const OracleResult2 r = oracle_search2(s, s);
  ASSERT_TRUE(r.channel);
  EXPECT_LT(moment_residual(apply2(*r.channel, s), s), 1e-6);
}

TEST(Oracle2, FindsForwardChannels) {
  int found = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const ForwardInstance f = forward_instance(ForwardKind::two_mode_type1, seed);
    const OracleResult2 r = oracle_search2(f.rho, f.sigma);
    if (!r.channel) continue;
    ++found;
    EXPECT_FALSE(validate_igo2(*r.channel));
    EXPECT_LT(moment_residual(apply2(*r.channel, f.rho), f.sigma), SearchConfig{}.tol);
  }
  EXPECT_GE(found, 29);
}

TEST(Oracle2, FindsTypeTwoChannels) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GaussianState s = random_state2_standard(false, seed);
    const TwoModeIGO g = random_igo2(IgoType::II, seed + 100);
    EXPECT_TRUE(oracle_search2(s, apply2(g, s)).channel) << seed;
  }
}

TEST(Oracle2, ShrinkingSqueezingHasNoChannel) {
  const OracleResult2 r = oracle_search2(make_two_mode_standard(tmsv_form(1.0)),
                                         make_two_mode_standard(tmsv_form(0.5)));
  EXPECT_FALSE(r.channel);
  EXPECT_GT(r.residual, 1e-3);
}

TEST(Oracle2, ReflectionsOnlySearchSkipsProperRotations) {
  SearchConfig cfg;
  cfg.reflections_only = true;
  const GaussianState s = make_two_mode_standard(tmsv_form(0.3));
  EXPECT_FALSE(oracle_search2(s, s, cfg).channel);
  const GaussianState th = make_thermal(1.0);
  const OracleResult1 r = oracle_search1(th, th, cfg);
  ASSERT_TRUE(r.channel);
  EXPECT_TRUE(r.channel->reflect);
}

TEST(Generators, Validity) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    ASSERT_TRUE(is_valid_state(random_state1(Mixedness::any, seed)));
    ASSERT_TRUE(is_pure(random_state1(Mixedness::pure, seed)));
    const GaussianState m = random_state1(Mixedness::mixed, seed);
    ASSERT_GE(m.V1().determinant(), 1.01);
    ASSERT_TRUE(is_pure(random_coherent(seed)));
    ASSERT_TRUE(is_pure(random_state2_standard(true, seed)));
    ASSERT_TRUE(is_valid_state(random_state2_standard(false, seed)));
    ASSERT_FALSE(is_pure(random_state2_standard(false, seed)));
    ASSERT_FALSE(validate_igo1(random_igo1(IgoType::II, seed)));
    ASSERT_FALSE(validate_igo2(random_igo2(IgoType::I, seed)));
  }
}

TEST(Generators, ForwardInstancesAreExact) {
  for (auto kind : {ForwardKind::one_mode_type1, ForwardKind::one_mode_type2,
                    ForwardKind::two_mode_type1, ForwardKind::two_mode_pure_standard}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const ForwardInstance f = forward_instance(kind, seed);
      if (const auto* g = std::get_if<OneModeIGO>(&f.channel)) {
        ASSERT_EQ(moment_residual(apply1(*g, f.rho), f.sigma), 0.0);
        ASSERT_EQ(igo1_type(*g), kind == ForwardKind::one_mode_type1 ? IgoType::I : IgoType::II);
      } else {
        ASSERT_EQ(moment_residual(apply2(std::get<TwoModeIGO>(f.channel), f.rho), f.sigma), 0.0);
      }
      ASSERT_TRUE(is_valid_state(f.sigma));
    }
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const ForwardInstance f = forward_instance(ForwardKind::two_mode_pure_standard, seed);
    ASSERT_TRUE(is_pure(f.sigma));
    ASSERT_TRUE(standard_form_of(f.sigma.V)) << seed;
  }
}

TEST(Determinism, SameSeedSameResult) {
  const ForwardInstance a = forward_instance(ForwardKind::one_mode_type2, 77);
  const ForwardInstance b = forward_instance(ForwardKind::one_mode_type2, 77);
  EXPECT_EQ(moment_residual(a.sigma, b.sigma), 0.0);
  const OracleResult1 r1 = oracle_search1(a.rho, a.sigma);
  const OracleResult1 r2 = oracle_search1(b.rho, b.sigma);
  ASSERT_TRUE(r1.channel && r2.channel);
  EXPECT_EQ(r1.channel->t, r2.channel->t);
  EXPECT_EQ(r1.channel->theta, r2.channel->theta);
  EXPECT_EQ(r1.residual, r2.residual);
}

}  // namespace
}  // namespace cvgauss
