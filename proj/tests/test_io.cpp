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

#include <array>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "cvgauss/io.hpp"

namespace cvgauss {
namespace {

namespace fs = std::filesystem;

// --- serialization ---

TEST(StateJson, RoundTripIsExact) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const GaussianState s = seed % 2 ? random_state1(Mixedness::any, seed)
                                     : random_state2_standard(seed % 4 == 0, seed);
    std::string label;
    const GaussianState back = state_from_json(parse_json(dump_json(state_to_json(s, "x"))), &label);
    ASSERT_EQ(back.modes, s.modes);
    ASSERT_EQ(moment_residual(back, s), 0.0);
    ASSERT_EQ(label, "x");
  }
}

TEST(StateJson, ShapeErrors) {
  EXPECT_THROW(parse_json("{\"modes\": 1,"), ParseError);
  EXPECT_THROW(state_from_json(parse_json("[]")), ParseError);
  EXPECT_THROW(state_from_json(parse_json(R"({"modes": 3, "d": [], "V": []})")), ParseError);
  EXPECT_THROW(state_from_json(parse_json(R"({"modes": 1, "d": [0], "V": [[1,0],[0,1]]})")),
               ParseError);
  EXPECT_THROW(state_from_json(parse_json(R"({"modes": 1, "d": [0, 0], "V": [[1,0],[0]]})")),
               ParseError);
  EXPECT_THROW(state_from_json(parse_json(R"({"modes": 1, "d": [0, "a"], "V": [[1,0],[0,1]]})")),
               ParseError);
  EXPECT_THROW(read_json_file("/nonexistent/state.json"), ParseError);
}

TEST(ChannelJson, RoundTrip) {
  const OneModeIGO g1{0.7, 1.25, true, 2.5};
  const auto back1 = std::get<OneModeIGO>(channel_from_json(channel_to_json(g1)));
  EXPECT_EQ(back1.t, g1.t);
  EXPECT_EQ(back1.theta, g1.theta);
  EXPECT_EQ(back1.reflect, g1.reflect);
  EXPECT_EQ(back1.omega, g1.omega);

  const TwoModeIGO g2 = random_igo2(IgoType::II, 5);
  const auto back2 = std::get<TwoModeIGO>(channel_from_json(parse_json(dump_json(channel_to_json(g2)))));
  EXPECT_EQ(back2.block_type, IgoType::II);
  EXPECT_EQ(back2.transfer(), g2.transfer());
  EXPECT_EQ(back2.noise(), g2.noise());

  EXPECT_THROW(channel_from_json(parse_json(R"({"kind": "three-mode"})")), ParseError);
  EXPECT_THROW(channel_from_json(parse_json(R"({"kind": "one-mode", "t": 1})")), ParseError);
  EXPECT_THROW(channel_from_json(parse_json(R"({"kind": "two-mode", "block_type": "III"})")),
               ParseError);
}

TEST(DecisionJson, Fields) {
  const Decision d = decide_pure1(make_coherent({1, 0}), make_coherent({0, 1}));
  const Json j = decision_to_json(d);
  EXPECT_EQ(j["verdict"], "Convertible");
  EXPECT_EQ(j["rationale"], "2.1-rotation");
  EXPECT_EQ(j["witness"]["kind"], "one-mode");
  const Json none = decision_to_json(decide_pure1(make_coherent({1, 0}), make_coherent({2, 0})));
  EXPECT_TRUE(none["witness"].is_null());
  EXPECT_TRUE(none["witness_residual"].is_null());
}

// --- command line ---

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(CVGAUSS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliRun r{-1, ""};
  if (!pipe) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cvgauss_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const Json& j) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << dump_json(j);
    return p.string();
  }
  std::string write_text(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(Cli, Validate) {
  CliRun r = run_cli("validate " + write("vac.json", state_to_json(make_vacuum())));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "valid, pure, incoherent\n");
  const GaussianState bad(Vec2::Zero(), Mat2(0.5 * Mat2::Identity()));
  r = run_cli("validate " + write("bad.json", state_to_json(bad)));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("det V >= 1"), std::string::npos);
  EXPECT_EQ(run_cli("validate " + write_text("broken.json", "{")).code, 2);
  EXPECT_EQ(run_cli("validate").code, 2);
  EXPECT_EQ(run_cli("frobnicate x").code, 2);
}

TEST_F(Cli, Canon) {
  const CliRun r = run_cli("canon " + write("th.json", state_to_json(make_thermal(1.0))));
  ASSERT_EQ(r.code, 0);
  const Json j = parse_json(r.out);
  EXPECT_DOUBLE_EQ(j["nbar"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(j["r"].get<double>(), 0.0);
  const CliRun r2 = run_cli("canon " + write("sq.json", state_to_json(make_two_mode_standard(tmsv_form(0.6)))));
  EXPECT_TRUE(parse_json(r2.out)["pure_standard_form"].get<bool>());
}

TEST_F(Cli, DecideExitCodes) {
  const std::string c1 = write("c1.json", state_to_json(make_coherent({1, 0}), "coherent 1"));
  const std::string ci = write("ci.json", state_to_json(make_coherent({0, 1})));
  const std::string th = write("th.json", state_to_json(make_thermal(1.0)));
  CliRun r = run_cli("decide " + c1 + " " + ci);
  EXPECT_EQ(r.code, 0);
  Json j = parse_json(r.out);
  EXPECT_EQ(j["decision"]["rationale"], "2.1-rotation");
  EXPECT_EQ(j["source"], "coherent 1");
  EXPECT_EQ(j["config"]["tol"].get<double>(), 1e-9);

  r = run_cli("decide " + th + " " + c1);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(parse_json(r.out)["decision"]["rationale"], "2.2-no-go");

  Mat2 aniso;
  aniso << 3, 0, 0, 2;
  const std::string iso = write("iso.json", state_to_json(GaussianState(Vec2(1, 0), Mat2(2.0 * Mat2::Identity()))));
  const std::string an = write("an.json", state_to_json(GaussianState(Vec2(0.5, 0), aniso)));
  r = run_cli("--grid 180x100 decide " + iso + " " + an);
  EXPECT_EQ(r.code, 4);
  j = parse_json(r.out);
  EXPECT_FALSE(j["oracle"]["found"].get<bool>());

  EXPECT_EQ(run_cli("decide --mode pure1 " + th + " " + c1).code, 2);
  EXPECT_EQ(run_cli("decide --mode bogus " + c1 + " " + ci).code, 2);
}

TEST_F(Cli, ToleranceFlagAndEnvironment) {
  Mat2 near;
  near << 1.0005, 0, 0, 1.0;
  const std::string a = write("a.json", state_to_json(GaussianState(Vec2(1, 0), near)));
  const std::string b = write("b.json", state_to_json(GaussianState(Vec2(0, 1), near)));
  EXPECT_EQ(run_cli("--tol 1e-2 decide " + a + " " + b).code, 0);
  EXPECT_EQ(run_cli("decide --mode pure1 " + a + " " + b).code, 2);
  EXPECT_EQ(run_cli("validate " + a).out, "valid, mixed, coherent\n");
  ::setenv("CVGAUSS_TOL", "1e-2", 1);
  const CliRun env = run_cli("validate " + a);
  ::unsetenv("CVGAUSS_TOL");
  EXPECT_EQ(env.out, "valid, pure, coherent\n");
}

TEST_F(Cli, WitnessFeedsApply) {
  const GaussianState src(Vec2(1, 0), Mat2(Vec2(2, 1).asDiagonal()));
  const GaussianState dst = apply1(OneModeIGO{0.6, 1.0, false, 1.0}, src);
  const std::string s = write("s.json", state_to_json(src));
  const std::string t = write("t.json", state_to_json(dst));
  const CliRun w = run_cli("witness " + s + " " + t);
  ASSERT_EQ(w.code, 0);
  const std::string ch = write_text("w.json", w.out);
  const CliRun a = run_cli("apply " + ch + " " + s);
  ASSERT_EQ(a.code, 0);
  EXPECT_LT(moment_residual(state_from_json(parse_json(a.out)), dst), 1e-9);
}

TEST_F(Cli, Apply) {
  const GaussianState s = random_state1(Mixedness::any, 3);
  const std::string sp = write("s.json", state_to_json(s));
  Json id = {{"kind", "one-mode"}, {"t", 1}, {"theta", 0}, {"reflect", false}, {"omega", 0}};
  CliRun r = run_cli("apply " + write("id.json", id) + " " + sp);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(moment_residual(state_from_json(parse_json(r.out)), s), 0.0);

  Json reset = {{"kind", "one-mode"}, {"t", 0}, {"theta", 0}, {"reflect", false}, {"omega", 3}};
  r = run_cli("apply " + write("reset.json", reset) + " " + sp);
  EXPECT_EQ(moment_residual(state_from_json(parse_json(r.out)), make_thermal(1.0)), 0.0);

  Json bad = {{"kind", "one-mode"}, {"t", 1}, {"theta", 0}, {"reflect", true}, {"omega", 1}};
  EXPECT_EQ(run_cli("apply " + write("bad.json", bad) + " " + sp).code, 3);
}

TEST_F(Cli, OracleAndReport) {
  const std::string c1 = write("c1.json", state_to_json(make_coherent({1, 0})));
  const std::string c2 = write("c2.json", state_to_json(make_coherent({2, 0})));
  CliRun r = run_cli("--grid 360x200 oracle " + c1 + " " + c2);
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(parse_json(r.out)["result"]["found"].get<bool>());
  EXPECT_EQ(run_cli("--grid 10 oracle " + c1 + " " + c2).code, 2);

  Json pairs = Json::array();
  pairs.push_back({{"label", "same"}, {"source", state_to_json(make_coherent({1, 0}))},
                   {"target", state_to_json(make_coherent({0, 1}))}});
  r = run_cli("report " + write("pairs.json", pairs));
  EXPECT_EQ(r.code, 0);
  const Json j = parse_json(r.out);
  EXPECT_EQ(j["summary"]["agree"], 1);
  EXPECT_EQ(j["pairs"][0]["label"], "same");
}

TEST_F(Cli, BuiltinReportIsDeterministic) {
  const CliRun a = run_cli("--seed 5 report --builtin");
  const CliRun b = run_cli("--seed 5 report --builtin");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Json j = parse_json(a.out);
  EXPECT_FALSE(j["summary"].contains("unexplained"));
  EXPECT_EQ(j["summary"]["A"], 2);
  EXPECT_EQ(j["summary"]["B"], 1);
}

}  // namespace
}  // namespace cvgauss
