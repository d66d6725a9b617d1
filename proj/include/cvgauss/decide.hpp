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

// Convertibility of Gaussian states under incoherent Gaussian operations.
//
// Each question is answered on two layers:
//   * closed-form predicates that evaluate the published conditions literally
//     (`predicate_2_3`, `predicate_2_4`, `interval_set_3_2`);
//   * complete solvers (`decide_pure1`, `decide_mixed1`,
//     `decide_pure2_standard`) that enumerate every branch of the moment
//     equations and only answer Convertible with a witness channel that has
//     been re-applied to the source and checked against the target.
// `consistency_report` runs both layers next to the brute-force oracle.

#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cvgauss/igo.hpp"
#include "cvgauss/moments.hpp"
#include "cvgauss/oracle.hpp"

namespace cvgauss {

enum class Verdict { Convertible, NotConvertible, DegenerateUnknown };

std::string to_string(Verdict v);

using Witness = std::variant<std::monostate, OneModeIGO, TwoModeIGO>;

struct Decision {
  Verdict verdict = Verdict::NotConvertible;
  Witness witness;
  /// Decision path tag, e.g. "2.1-rotation", "2.3-ii",
  /// "3.2-interval-2", "2.2-no-go", "solver-direct".
  std::string rationale;
  std::vector<std::string> notes;
  /// Max moment mismatch of the re-applied witness; NaN without a witness.
  double witness_residual = std::numeric_limits<double>::quiet_NaN();

  bool has_witness() const { return !std::holds_alternative<std::monostate>(witness); }
};

/// Applies the witness to `source` and returns the residual against `target`.
double witness_residual(const Witness& w, const GaussianState& source, const GaussianState& target);

// --- one mode -------------------------------------------------------------

Decision decide_pure1(const GaussianState& rho, const GaussianState& sigma);

/// True iff sigma is pure and coherent, in which case every IGO-preimage of
/// sigma is pure.
bool preimage_must_be_pure(const GaussianState& sigma);

enum class CaseTag { i, ii, iii };

std::string to_string(CaseTag c);

/// Literal condition sets for type I (`predicate_2_3`) and type II
/// (`predicate_2_4`) channels, evaluated on the ordered eigenvalues
/// lambda1 >= lambda2, mu1 >= mu2 and on |d1|, |d2|. Only norms of the first
/// moments enter. Throws DegenerateInput when lambda1 == lambda2 or d1 == 0.
std::optional<CaseTag> predicate_2_3(const GaussianState& rho, const GaussianState& sigma);
std::optional<CaseTag> predicate_2_4(const GaussianState& rho, const GaussianState& sigma);

Decision decide_mixed1(const GaussianState& rho, const GaussianState& sigma);

// --- two modes, pure standard form ----------------------------------------

struct Interval {
  int tag = 0;  // 1..4
  double lo = 0.0;
  double hi = 0.0;

  bool empty() const;
  bool contains(double x) const;
};

/// Closed intervals over t^2 of the scaling on output mode 1.
struct IntervalSet {
  double alpha = 0.0;                // c1'^2 / c1^2
  std::array<Interval, 4> intervals;  // as published
  /// Interval (2) with the upper end min{1, (a'-1)/(a-1)} that its own
  /// derivation requires; the published upper end is 1.
  Interval interval2_derived;

  bool nonempty() const;
  bool derived_nonempty() const;
};

IntervalSet interval_set_3_2(const StandardForm2& src, const StandardForm2& dst);

Decision decide_pure2_standard(const GaussianState& rho, const GaussianState& sigma);

// --- cross checks -----------------------------------------------------------

/// Verdicts of the published conditions, the complete solver and the oracle
/// for one pair, plus the divergence class when they disagree:
///   "A"  one mode: the norm-only conditions hold but no channel matches the
///        first-moment direction;
///   "B"  two modes: only the published interval (2) is nonempty;
///   "unexplained" for any other disagreement.
struct ConsistencyReport {
  std::string label;
  int modes = 1;
  Verdict published = Verdict::DegenerateUnknown;  // DegenerateUnknown: hypotheses not met
  std::string published_basis;
  Verdict solver = Verdict::DegenerateUnknown;
  std::string solver_rationale;
  bool oracle_found = false;
  double oracle_residual = 0.0;
  std::string divergence;  // empty when consistent
  std::vector<std::string> notes;

  bool agree() const { return divergence.empty(); }
};

ConsistencyReport consistency_report(const GaussianState& rho, const GaussianState& sigma,
                                     const SearchConfig& cfg = {}, const std::string& label = "");

}  // namespace cvgauss
