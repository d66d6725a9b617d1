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

// cvgauss: command-line front end.
//
//   cvgauss validate STATE
//   cvgauss canon STATE
//   cvgauss decide SRC DST [--mode auto|pure1|mixed1|pure2]
//   cvgauss witness SRC DST [--mode ...]
//   cvgauss apply CHANNEL STATE
//   cvgauss oracle SRC DST
//   cvgauss report (PAIRS | --builtin)
//
// Exit codes: 0 convertible / success, 1 not convertible, 2 usage or parse
// error, 3 invalid state or channel, 4 degenerate (unknown).

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cvgauss/corpus.hpp"
#include "cvgauss/decide.hpp"
#include "cvgauss/errors.hpp"
#include "cvgauss/io.hpp"
#include "cvgauss/oracle.hpp"
#include "cvgauss/tolerance.hpp"

namespace {

using namespace cvgauss;

constexpr int kExitConvertible = 0;
constexpr int kExitNotConvertible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitDegenerate = 4;

struct Options {
  std::optional<double> tol;
  std::uint64_t seed = 2026;
  std::string grid;
  std::string mode = "auto";
  bool builtin = false;
  std::vector<std::string> files;
};

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Convertible:
      return kExitConvertible;
    case Verdict::NotConvertible:
      return kExitNotConvertible;
    case Verdict::DegenerateUnknown:
      return kExitDegenerate;
  }
  return kExitUsage;
}

SearchConfig search_config(const Options& opt) {
  SearchConfig cfg;
  if (!opt.grid.empty()) {
    const auto x = opt.grid.find('x');
    try {
      if (x == std::string::npos) throw std::invalid_argument("");
      cfg.theta_steps = std::stoi(opt.grid.substr(0, x));
      cfg.t_steps = std::stoi(opt.grid.substr(x + 1));
    } catch (const std::exception&) {
      throw ParseError("--grid expects THETAxT, e.g. 720x400");
    }
  }
  if (auto why = cfg.check()) throw ParseError("--grid: " + *why);
  return cfg;
}

void apply_tolerance(const Options& opt) {
  Tolerances tol = tolerances();
  if (const char* env = std::getenv("CVGAUSS_TOL")) {
    try {
      tol.eq = std::stod(env);
    } catch (const std::exception&) {
      throw ParseError("CVGAUSS_TOL must be a number");
    }
  }
  if (opt.tol) tol.eq = *opt.tol;
  if (!(tol.eq > 0.0)) throw ParseError("tolerance must be positive");
  set_tolerances(tol);
}

/// Reads a state file and rejects unphysical moments.
GaussianState load_state(const std::string& path, std::string* label = nullptr) {
  const GaussianState s = state_from_json(read_json_file(path), label);
  if (auto why = validate_state(s)) throw InvalidState(path + ": " + *why);
  return s;
}

Json envelope(const Options& opt, const char* command) {
  Json j;
  j["command"] = command;
  Json cfg = config_to_json(search_config(opt), tolerances());
  cfg["seed"] = opt.seed;
  j["config"] = cfg;
  return j;
}

Decision run_decide(const std::string& mode, const GaussianState& src, const GaussianState& dst) {
  if (src.modes != dst.modes) throw ModeMismatch("source and target mode counts differ");
  if (mode == "pure1") return decide_pure1(src, dst);
  if (mode == "mixed1") return decide_mixed1(src, dst);
  if (mode == "pure2") return decide_pure2_standard(src, dst);
  if (src.modes == 2) return decide_pure2_standard(src, dst);
  return is_pure(src) && is_pure(dst) ? decide_pure1(src, dst) : decide_mixed1(src, dst);
}

Json oracle_json(const GaussianState& src, const GaussianState& dst, const SearchConfig& cfg) {
  Json j;
  if (src.modes == 1) {
    const OracleResult1 r = oracle_search1(src, dst, cfg);
    j["found"] = r.channel.has_value();
    j["residual"] = r.residual;
    j["channel"] = r.channel ? channel_to_json(*r.channel) : Json(nullptr);
  } else {
    const OracleResult2 r = oracle_search2(src, dst, cfg);
    j["found"] = r.channel.has_value();
    j["residual"] = r.residual;
    j["channel"] = r.channel ? channel_to_json(*r.channel) : Json(nullptr);
  }
  return j;
}

int cmd_validate(const Options& opt) {
  const GaussianState s = state_from_json(read_json_file(opt.files.at(0)));
  if (auto why = validate_state(s)) {
    std::cout << "invalid: " << *why << "\n";
    return kExitInvalid;
  }
  std::cout << "valid, " << (is_pure(s) ? "pure" : "mixed") << ", "
            << (is_incoherent(s) ? "incoherent" : "coherent") << "\n";
  return 0;
}

int cmd_canon(const Options& opt) {
  const GaussianState s = load_state(opt.files.at(0));
  Json j;
  j["modes"] = s.modes;
  if (s.modes == 1) {
    const StandardForm1 sf = standard_decomposition(s.V1());
    j["nbar"] = sf.nbar;
    j["r"] = sf.r;
    j["theta"] = sf.theta;
  } else if (const auto sf = standard_form_of(s.V)) {
    j["standard_form"] = true;
    j["a"] = sf->a;
    j["b"] = sf->b;
    j["c1"] = sf->c1;
    j["c2"] = sf->c2;
    j["pure_standard_form"] = two_mode_pure_standard_check(*sf);
  } else {
    j["standard_form"] = false;
  }
  std::cout << dump_json(j);
  return 0;
}

int cmd_decide(const Options& opt, bool witness_only) {
  std::string src_label, dst_label;
  const GaussianState src = load_state(opt.files.at(0), &src_label);
  const GaussianState dst = load_state(opt.files.at(1), &dst_label);
  const Decision d = run_decide(opt.mode, src, dst);
  if (witness_only) {
    if (!d.has_witness()) {
      std::cerr << "no witness: " << to_string(d.verdict) << " (" << d.rationale << ")\n";
      return verdict_exit(d.verdict);
    }
    std::cout << dump_json(channel_to_json(d.witness));
    return kExitConvertible;
  }
  Json j = envelope(opt, "decide");
  j["mode"] = opt.mode;
  j["source"] = src_label;
  j["target"] = dst_label;
  j["decision"] = decision_to_json(d);
  if (d.verdict == Verdict::DegenerateUnknown) j["oracle"] = oracle_json(src, dst, search_config(opt));
  std::cout << dump_json(j);
  return verdict_exit(d.verdict);
}

int cmd_apply(const Options& opt) {
  const Witness w = channel_from_json(read_json_file(opt.files.at(0)));
  const GaussianState s = load_state(opt.files.at(1));
  if (const auto* g = std::get_if<OneModeIGO>(&w)) {
    if (auto why = validate_igo1(*g)) throw InvalidChannel(*why);
    std::cout << dump_json(state_to_json(apply1(*g, s)));
  } else {
    const auto& g2 = std::get<TwoModeIGO>(w);
    if (auto why = validate_igo2(g2)) throw InvalidChannel(*why);
    std::cout << dump_json(state_to_json(apply2(g2, s)));
  }
  return 0;
}

int cmd_oracle(const Options& opt) {
  const GaussianState src = load_state(opt.files.at(0));
  const GaussianState dst = load_state(opt.files.at(1));
  if (src.modes != dst.modes) throw ModeMismatch("source and target mode counts differ");
  Json j = envelope(opt, "oracle");
  j["result"] = oracle_json(src, dst, search_config(opt));
  std::cout << dump_json(j);
  return j["result"]["found"].get<bool>() ? kExitConvertible : kExitNotConvertible;
}

int cmd_report(const Options& opt) {
  std::vector<CorpusPair> pairs;
  if (opt.builtin) {
    pairs = builtin_corpus(opt.seed);
  } else {
    if (opt.files.empty()) throw ParseError("report needs a pair-list file or --builtin");
    const Json list = read_json_file(opt.files.at(0));
    if (!list.is_array()) throw ParseError("pair list must be a JSON array");
    for (const Json& item : list) {
      if (!item.is_object() || !item.contains("source") || !item.contains("target")) {
        throw ParseError("each pair needs \"source\" and \"target\" states");
      }
      CorpusPair p;
      p.label = item.value("label", std::string());
      p.source = state_from_json(item.at("source"));
      p.target = state_from_json(item.at("target"));
      for (const GaussianState* s : {&p.source, &p.target}) {
        if (auto why = validate_state(*s)) throw InvalidState(p.label + ": " + *why);
      }
      pairs.push_back(std::move(p));
    }
  }
  const SearchConfig cfg = search_config(opt);
  Json j = envelope(opt, "report");
  j["pairs"] = Json::array();
  std::map<std::string, int> counts;
  for (const CorpusPair& p : pairs) {
    const ConsistencyReport r = consistency_report(p.source, p.target, cfg, p.label);
    j["pairs"].push_back(report_to_json(r));
    ++counts[r.divergence.empty() ? "agree" : r.divergence];
  }
  Json summary;
  summary["total"] = pairs.size();
  for (const auto& [k, v] : counts) summary[k] = v;
  j["summary"] = summary;
  std::cout << dump_json(j);
  return counts.count("unexplained") ? kExitNotConvertible : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convertibility of Gaussian states under incoherent Gaussian operations"};
  app.require_subcommand(1);
  Options opt;
  double tol = 0.0;
  auto* tol_opt = app.add_option("--tol", tol, "equality tolerance (default 1e-9, env CVGAUSS_TOL)");
  app.add_option("--seed", opt.seed, "seed for generated corpora");
  app.add_option("--grid", opt.grid, "oracle grid as THETAxT (default 720x400)");

  auto* validate = app.add_subcommand("validate", "check physicality, purity and incoherence");
  validate->add_option("state", opt.files)->required()->expected(1);
  auto* canon = app.add_subcommand("canon", "canonical parameters of a state");
  canon->add_option("state", opt.files)->required()->expected(1);
  auto* decide = app.add_subcommand("decide", "decide convertibility, print JSON decision");
  auto* witness = app.add_subcommand("witness", "print a witness channel file");
  for (auto* sub : {decide, witness}) {
    sub->add_option("files", opt.files, "source and target state files")->required()->expected(2);
    sub->add_option("--mode", opt.mode)->check(CLI::IsMember({"auto", "pure1", "mixed1", "pure2"}));
  }
  auto* apply = app.add_subcommand("apply", "apply a channel file to a state file");
  apply->add_option("files", opt.files, "channel and state files")->required()->expected(2);
  auto* oracle = app.add_subcommand("oracle", "brute-force channel search");
  oracle->add_option("files", opt.files, "source and target state files")->required()->expected(2);
  auto* report = app.add_subcommand("report", "consistency report over a pair list");
  report->add_option("pairs", opt.files, "JSON array of {label, source, target}")->expected(0, 1);
  report->add_flag("--builtin", opt.builtin, "use the built-in corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (*tol_opt) opt.tol = tol;

  try {
    apply_tolerance(opt);
    if (*validate) return cmd_validate(opt);
    if (*canon) return cmd_canon(opt);
    if (*decide) return cmd_decide(opt, false);
    if (*witness) return cmd_decide(opt, true);
    if (*apply) return cmd_apply(opt);
    if (*oracle) return cmd_oracle(opt);
    if (*report) return cmd_report(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidState& e) {
    std::cerr << "invalid state: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidChannel& e) {
    std::cerr << "invalid channel: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
