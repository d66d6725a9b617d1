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

#include "cvgauss/decide.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cvgauss/errors.hpp"
#include "cvgauss/tolerance.hpp"

namespace cvgauss {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double tau() { return tolerances().eq; }
double witness_tol() { return 10.0 * tolerances().eq; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_one_mode(const GaussianState& s, const char* who) {
  if (s.modes != 1) throw ModeMismatch(std::string(who) + " expects one-mode states");
}

void require_valid(const GaussianState& s) {
  if (auto why = validate_state(s)) throw InvalidState(*why);
}

const Mat2 kFlip = Vec2(1.0, -1.0).asDiagonal();

/// Accepts `g` as the decision witness when it is physical and maps rho onto
/// sigma within the witness tolerance.
bool accept1(const OneModeIGO& g, const GaussianState& rho, const GaussianState& sigma,
             Decision& out, const std::string& rationale) {
  if (validate_igo1(g)) return false;
  const double r = moment_residual(apply1(g, rho), sigma);
  if (!(r <= witness_tol())) return false;
  out.verdict = Verdict::Convertible;
  out.witness = g;
  out.rationale = rationale;
  out.witness_residual = r;
  return true;
}

bool accept2(const TwoModeIGO& g, const GaussianState& rho, const GaussianState& sigma,
             Decision& out, const std::string& rationale) {
  if (validate_igo2(g)) return false;
  const double r = moment_residual(apply2(g, rho), sigma);
  if (!(r <= witness_tol())) return false;
  out.verdict = Verdict::Convertible;
  out.witness = g;
  out.rationale = rationale;
  out.witness_residual = r;
  return true;
}

struct Spectra {
  double l1, l2, m1, m2;
  double n1, n2;  // squared first-moment norms
};

Spectra spectra(const GaussianState& rho, const GaussianState& sigma) {
  const auto a = diagonalize_det1(rho.V1());
  const auto b = diagonalize_det1(sigma.V1());
  return {a.lambda1, a.lambda2, b.lambda1, b.lambda2, rho.d1().squaredNorm(),
          sigma.d1().squaredNorm()};
}

Spectra checked_spectra(const GaussianState& rho, const GaussianState& sigma) {
  require_one_mode(rho, "predicate");
  require_one_mode(sigma, "predicate");
  const Spectra s = spectra(rho, sigma);
  if (s.l1 - s.l2 <= tau()) throw DegenerateInput("source eigenvalues coincide (lambda1 = lambda2)");
  if (std::sqrt(s.n1) <= tau()) throw DegenerateInput("source first moment vanishes (d1 = 0)");
  return s;
}

bool near(double x, double y) { return std::abs(x - y) <= tau() * std::max(1.0, std::abs(y)); }
bool leq(double x, double y) { return x <= y + tau() * std::max(1.0, std::abs(y)); }

bool case_i(const Spectra& s) {
  return std::abs(s.m1 - s.m2) <= tau() && std::sqrt(s.n2) <= tau() && s.m1 >= 1.0 - tau();
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Convertible:
      return "Convertible";
    case Verdict::NotConvertible:
      return "NotConvertible";
    case Verdict::DegenerateUnknown:
      return "DegenerateUnknown";
  }
  return "?";
}

std::string to_string(CaseTag c) {
  switch (c) {
    case CaseTag::i:
      return "i";
    case CaseTag::ii:
      return "ii";
    case CaseTag::iii:
      return "iii";
  }
  return "?";
}

double witness_residual(const Witness& w, const GaussianState& source,
                        const GaussianState& target) {
  if (const auto* g = std::get_if<OneModeIGO>(&w)) return moment_residual(apply1(*g, source), target);
  if (const auto* g = std::get_if<TwoModeIGO>(&w)) return moment_residual(apply2(*g, source), target);
  return std::numeric_limits<double>::quiet_NaN();
}

// --- one mode -------------------------------------------------------------

Decision decide_pure1(const GaussianState& rho, const GaussianState& sigma) {
  require_one_mode(rho, "decide_pure1");
  require_one_mode(sigma, "decide_pure1");
  require_valid(rho);
  require_valid(sigma);
  if (!is_pure(rho)) throw NotPure("source state is not pure (det V != 1)");
  if (!is_pure(sigma)) throw NotPure("target state is not pure (det V != 1)");

  Decision out;
  const auto a = diagonalize_det1(rho.V1());
  const auto b = diagonalize_det1(sigma.V1());
  std::vector<double> angles;
  if (a.lambda1 - a.lambda2 > tau()) {
    // R(psi2) V2 R(psi2)^t = R(psi1) V1 R(psi1)^t forces R(theta) = R(psi1 - psi2) up to -I.
    angles = {a.angle - b.angle, a.angle - b.angle + M_PI};
  } else if (rho.d1().norm() > tau()) {
    angles = {rotation_angle_between(rho.d1(), sigma.d1())};
  } else {
    angles = {0.0};
  }
  for (double theta : angles) {
    if (accept1(OneModeIGO{1.0, wrap_two_pi(theta), false, 0.0}, rho, sigma, out, "2.1-rotation")) {
      return out;
    }
  }
  if (accept1(OneModeIGO{0.0, 0.0, false, 1.0}, rho, sigma, out, "2.1-vacuum")) return out;
  out.verdict = Verdict::NotConvertible;
  out.rationale = "2.1-none";
  out.notes.push_back("no phase rotation maps the source onto the target and the target is not vacuum");
  return out;
}

bool preimage_must_be_pure(const GaussianState& sigma) {
  return is_pure(sigma) && !is_incoherent(sigma);
}

std::optional<CaseTag> predicate_2_3(const GaussianState& rho, const GaussianState& sigma) {
  const Spectra s = checked_spectra(rho, sigma);
  const double k = s.n2 / s.n1;
  if (case_i(s)) return CaseTag::i;
  if (near(k, (s.m1 - s.m2) / (s.l1 - s.l2)) &&
      leq(k, std::min(s.m1 / s.l1, (1.0 + s.m1) / (1.0 + s.l1))) &&
      leq(1.0 - s.m1, (1.0 - s.l1) * k)) {
    return CaseTag::ii;
  }
  if (near(k, (s.m1 - s.m2) / (s.l2 - s.l1)) &&
      leq(k, std::min(s.m1 / s.l2, (1.0 + s.m1) / (1.0 + s.l2))) &&
      leq(1.0 - s.m1, (1.0 - s.l2) * k)) {
    return CaseTag::iii;
  }
  return std::nullopt;
}

std::optional<CaseTag> predicate_2_4(const GaussianState& rho, const GaussianState& sigma) {
  const Spectra s = checked_spectra(rho, sigma);
  const double k = s.n2 / s.n1;
  if (case_i(s)) return CaseTag::i;
  if (near(k, (s.m1 - s.m2) / (s.l1 - s.l2)) && leq(k, (s.m1 - 1.0) / (s.l1 + 1.0))) {
    return CaseTag::ii;
  }
  if (near(k, (s.m1 - s.m2) / (s.l2 - s.l1)) && leq(k, (s.m1 - 1.0) / (s.l2 + 1.0))) {
    return CaseTag::iii;
  }
  return std::nullopt;
}

Decision decide_mixed1(const GaussianState& rho, const GaussianState& sigma) {
  require_one_mode(rho, "decide_mixed1");
  require_one_mode(sigma, "decide_mixed1");
  require_valid(rho);
  require_valid(sigma);

  Decision out;
  if (preimage_must_be_pure(sigma) && !is_pure(rho)) {
    out.verdict = Verdict::NotConvertible;
    out.rationale = "2.2-no-go";
    out.notes.push_back("target is pure and coherent, so every preimage is pure; source is mixed");
    return out;
  }

  const Spectra s = spectra(rho, sigma);
  if (s.m1 - s.m2 <= tau() && std::sqrt(s.n2) <= tau() &&
      accept1(OneModeIGO{0.0, 0.0, false, s.m1}, rho, sigma, out, "2.3-i")) {
    return out;
  }

  const bool iso_source = s.l1 - s.l2 <= tau();
  const bool no_moment = std::sqrt(s.n1) <= tau();
  const Vec2 d1 = rho.d1();
  const Vec2 d2 = sigma.d1();

  if (!iso_source) {
    const auto u = diagonalize_det1(rho.V1());
    const auto w = diagonalize_det1(sigma.V1());
    const OneModeIGO into{1.0, u.angle, false, 0.0};
    const OneModeIGO back{1.0, -w.angle, false, 0.0};
    for (bool reflect : {false, true}) {
      for (int q = 0; q < 4; ++q) {
        const double theta = q * M_PI / 2.0;
        const bool swapped = q % 2 == 1;
        const double lp1 = swapped ? s.l2 : s.l1;
        const double lp2 = swapped ? s.l1 : s.l2;
        const double t2 = no_moment ? (s.m1 - s.m2) / (lp1 - lp2) : s.n2 / s.n1;
        if (!(t2 >= 0.0) || !std::isfinite(t2)) continue;
        const OneModeIGO inner{std::sqrt(t2), theta, reflect, s.m1 - t2 * lp1};
        const OneModeIGO full = compose1(back, compose1(inner, into));
        const std::string tag = std::string(reflect ? "2.4-" : "2.3-") + (swapped ? "iii" : "ii");
        if (accept1(full, rho, sigma, out, tag)) return out;
      }
    }
  } else if (s.m1 - s.m2 <= tau() && !no_moment) {
    // Isotropic source and target: only the first-moment norm and direction remain.
    const double t = std::sqrt(s.n2 / s.n1);
    for (bool reflect : {false, true}) {
      const double theta = rotation_angle_between(d1, reflect ? Vec2(kFlip * d2) : d2);
      const OneModeIGO g{t, wrap_two_pi(theta), reflect, s.m1 - t * t * s.l1};
      if (accept1(g, rho, sigma, out, "solver-direct")) return out;
    }
  }

  if (is_pure(rho) && is_pure(sigma)) {
    out.verdict = Verdict::NotConvertible;
    out.rationale = "2.1-none";
  } else if (!iso_source && !no_moment) {
    out.verdict = Verdict::NotConvertible;
    out.rationale = "2.3-2.4-none";
  } else {
    out.verdict = Verdict::DegenerateUnknown;
    out.rationale = "degenerate-none";
    out.notes.push_back(iso_source ? "source eigenvalues coincide (lambda1 = lambda2)"
                                   : "source first moment vanishes (d1 = 0)");
  }
  out.notes.push_back("no branch of the moment equations yields a physical channel");
  return out;
}

// --- two modes, pure standard form ----------------------------------------

bool Interval::empty() const { return lo > hi + tolerances().eq; }

bool Interval::contains(double x) const {
  return x >= lo - tolerances().eq && x <= hi + tolerances().eq;
}

bool IntervalSet::nonempty() const {
  return std::any_of(intervals.begin(), intervals.end(), [](const Interval& i) { return !i.empty(); });
}

bool IntervalSet::derived_nonempty() const {
  for (const Interval& i : intervals) {
    if (i.tag != 2 && !i.empty()) return true;
  }
  return !interval2_derived.empty();
}

namespace {

/// Largest x with den * x <= num (den >= 0); +-inf when den vanishes.
double upper_bound_of(double num, double den) {
  if (den > tolerances().eq) return num / den;
  return num >= -tolerances().eq ? kInf : -kInf;
}

/// Smallest x with den * x >= num (den >= 0); +-inf when den vanishes.
double lower_bound_of(double num, double den) {
  if (den > tolerances().eq) return num / den;
  return num <= tolerances().eq ? -kInf : kInf;
}

std::string describe(const Interval& i) {
  return "(" + std::to_string(i.tag) + ") [" + fmt(i.lo) + ", " + fmt(i.hi) + "]" +
         (i.empty() ? " empty" : " nonempty");
}

}  // namespace

IntervalSet interval_set_3_2(const StandardForm2& src, const StandardForm2& dst) {
  if (std::abs(src.c1 * src.c2) <= tolerances().eq || std::abs(dst.c1 * dst.c2) <= tolerances().eq) {
    throw DegenerateInput("correlation block has a vanishing entry (c1 c2 = 0)");
  }
  const double a = src.a, b = src.b, ap = dst.a, bp = dst.b;
  IntervalSet set;
  set.alpha = dst.c1 * dst.c1 / (src.c1 * src.c1);
  const double al = set.alpha;
  const double mode1_low = upper_bound_of(ap - 1.0, a - 1.0);   // x <= 1 branch
  const double mode1_high = upper_bound_of(ap + 1.0, a + 1.0);  // x >= 1 branch
  const double mode2_high = lower_bound_of(al * (b + 1.0), bp + 1.0);  // y >= 1 branch
  const double mode2_low = lower_bound_of(al * (b - 1.0), bp - 1.0);   // y <= 1 branch

  set.intervals[0] = {1, mode2_high, std::min({1.0, mode1_low, al})};
  set.intervals[1] = {2, std::max(al, mode2_low), 1.0};
  set.intervals[2] = {3, std::max(1.0, mode2_high), std::min(al, mode1_high)};
  set.intervals[3] = {4, std::max({al, mode2_low, 1.0}), mode1_high};
  set.interval2_derived = {2, std::max(al, mode2_low), std::min(1.0, mode1_low)};
  return set;
}

Decision decide_pure2_standard(const GaussianState& rho, const GaussianState& sigma) {
  if (rho.modes != 2 || sigma.modes != 2) {
    throw ModeMismatch("decide_pure2_standard expects two-mode states");
  }
  require_valid(rho);
  require_valid(sigma);
  if (!is_pure(rho)) throw NotPure("source state is not pure (det V != 1)");
  if (!is_pure(sigma)) throw NotPure("target state is not pure (det V != 1)");
  const auto src = standard_form_of(rho.V);
  const auto dst = standard_form_of(sigma.V);
  if (!src || !dst) {
    throw NotStandardForm("second moment is not in standard form; canonicalize first");
  }

  Decision out;
  if (std::abs(src->c1 * src->c2) <= tau() || std::abs(dst->c1 * dst->c2) <= tau()) {
    out.verdict = Verdict::DegenerateUnknown;
    out.rationale = "3.2-degenerate";
    out.notes.push_back("correlation block has a vanishing entry (c1 c2 = 0)");
    return out;
  }

  const IntervalSet set = interval_set_3_2(*src, *dst);
  out.notes.push_back("alpha = " + fmt(set.alpha));
  for (const Interval& i : set.intervals) out.notes.push_back("published " + describe(i));
  out.notes.push_back("derived " + describe(set.interval2_derived));

  const std::array<Interval, 4> feasible = {set.intervals[0], set.interval2_derived,
                                            set.intervals[2], set.intervals[3]};
  const double e_a[2] = {src->a, src->b};
  const double c_in[2] = {src->c1, src->c2};
  const Vec2 e0 = sigma.d.segment<2>(0);
  const Vec2 e1 = sigma.d.segment<2>(2);

  for (IgoType type : {IgoType::I, IgoType::II}) {
    const int in_p = type == IgoType::I ? 0 : 1;
    const int in_q = 1 - in_p;
    const Vec2 dp = rho.d.segment<2>(2 * in_p);
    const Vec2 dq = rho.d.segment<2>(2 * in_q);
    const double alpha = dst->c1 * dst->c1 / (c_in[in_p] * c_in[in_p]);

    double x = std::numeric_limits<double>::quiet_NaN();
    if (dp.norm() > tau()) {
      x = e0.squaredNorm() / dp.squaredNorm();
    } else if (dq.norm() > tau()) {
      const double y = e1.squaredNorm() / dq.squaredNorm();
      if (y > 0.0) x = alpha / y;
    } else {
      for (const Interval& i : feasible) {
        if (i.empty()) continue;
        x = std::clamp(std::sqrt(alpha), i.lo, std::max(i.lo, i.hi));
        break;
      }
    }
    if (!(x > 0.0) || !std::isfinite(x)) continue;
    const double y = alpha / x;

    std::vector<double> theta_p = {0.0, M_PI / 2.0, M_PI, 3.0 * M_PI / 2.0};
    if (dp.norm() > tau() && e0.norm() > tau()) {
      theta_p.insert(theta_p.begin(), rotation_angle_between(dp, e0));
    }
    const bool dir_q = dq.norm() > tau() && e1.norm() > tau();
    const double phi_q = dir_q ? rotation_angle_between(dq, e1) : 0.0;
    if (dir_q) {
      for (double s : {-phi_q, -phi_q + M_PI, phi_q, phi_q + M_PI}) theta_p.push_back(s);
    }

    const std::string tag =
        "3.2-interval-" + std::to_string(x <= 1.0 + tau() ? (x <= alpha + tau() ? 1 : 2)
                                                           : (x <= alpha + tau() ? 3 : 4));
    for (double tp : theta_p) {
      std::vector<double> theta_q = {-tp, -tp + M_PI, tp, tp + M_PI,
                                     0.0, M_PI / 2.0, M_PI, 3.0 * M_PI / 2.0};
      if (dir_q) theta_q.insert(theta_q.begin(), phi_q);
      for (double tq : theta_q) {
        TwoModeIGO g;
        g.block_type = type;
        g.blocks[in_p] = IgoBlock{std::sqrt(x), wrap_two_pi(tp), false, 0.0};
        g.blocks[in_q] = IgoBlock{std::sqrt(y), wrap_two_pi(tq), false, 0.0};
        g.blocks[0].omega = dst->a - e_a[in_p] * x;
        g.blocks[1].omega = dst->b - e_a[in_q] * y;
        if (accept2(g, rho, sigma, out, tag)) return out;
      }
    }
  }

  out.verdict = Verdict::NotConvertible;
  out.rationale = "3.2-infeasible";
  out.notes.push_back(set.derived_nonempty()
                          ? "second moments are reachable but no channel matches the first moments"
                          : "full constraint system on t^2 is infeasible");
  return out;
}

// --- cross checks -----------------------------------------------------------

namespace {

void published_one_mode(const GaussianState& rho, const GaussianState& sigma,
                        ConsistencyReport& rep) {
  if (is_pure(rho) && is_pure(sigma)) {
    const Decision d = decide_pure1(rho, sigma);
    rep.published = d.verdict;
    rep.published_basis = d.rationale;
    return;
  }
  if (preimage_must_be_pure(sigma) && !is_pure(rho)) {
    rep.published = Verdict::NotConvertible;
    rep.published_basis = "2.2-no-go";
    return;
  }
  try {
    const auto c3 = predicate_2_3(rho, sigma);
    const auto c4 = predicate_2_4(rho, sigma);
    if (c3) {
      rep.published = Verdict::Convertible;
      rep.published_basis = "2.3-" + to_string(*c3);
    } else if (c4) {
      rep.published = Verdict::Convertible;
      rep.published_basis = "2.4-" + to_string(*c4);
    } else {
      rep.published = Verdict::NotConvertible;
      rep.published_basis = "2.3-2.4-none";
    }
  } catch (const DegenerateInput& e) {
    rep.published = Verdict::DegenerateUnknown;
    rep.published_basis = std::string("hypotheses-not-met: ") + e.what();
  }
}

}  // namespace

ConsistencyReport consistency_report(const GaussianState& rho, const GaussianState& sigma,
                                     const SearchConfig& cfg, const std::string& label) {
  if (rho.modes != sigma.modes) throw ModeMismatch("source and target mode counts differ");
  ConsistencyReport rep;
  rep.label = label;
  rep.modes = rho.modes;
  bool published_only_interval2 = false;

  if (rho.modes == 1) {
    published_one_mode(rho, sigma, rep);
    const Decision d = decide_mixed1(rho, sigma);
    rep.solver = d.verdict;
    rep.solver_rationale = d.rationale;
    const OracleResult1 o = oracle_search1(rho, sigma, cfg);
    rep.oracle_found = o.channel.has_value();
    rep.oracle_residual = o.residual;
  } else {
    const Decision d = decide_pure2_standard(rho, sigma);
    rep.solver = d.verdict;
    rep.solver_rationale = d.rationale;
    if (d.verdict == Verdict::DegenerateUnknown) {
      rep.published = Verdict::DegenerateUnknown;
      rep.published_basis = "hypotheses-not-met: c1 c2 = 0";
    } else {
      const IntervalSet set = interval_set_3_2(*standard_form_of(rho.V), *standard_form_of(sigma.V));
      rep.published = set.nonempty() ? Verdict::Convertible : Verdict::NotConvertible;
      rep.published_basis = set.nonempty() ? "3.2-omega-nonempty" : "3.2-omega-empty";
      published_only_interval2 = set.nonempty() && !set.derived_nonempty();
      if (published_only_interval2) {
        rep.notes.push_back("only interval (2) is nonempty, and only with its published upper end 1");
      }
    }
    const OracleResult2 o = oracle_search2(rho, sigma, cfg);
    rep.oracle_found = o.channel.has_value();
    rep.oracle_residual = o.residual;
  }

  const bool solver_yes = rep.solver == Verdict::Convertible;
  const bool published_claims = rep.published != Verdict::DegenerateUnknown;
  const bool oracle_agrees = rep.oracle_found == solver_yes;
  const bool published_agrees = !published_claims || rep.published == rep.solver;
  if (oracle_agrees && published_agrees) return rep;

  const bool published_yes_alone =
      rep.published == Verdict::Convertible && !solver_yes && !rep.oracle_found;
  if (published_yes_alone && rep.modes == 1 && rep.published_basis.rfind("2.", 0) == 0 &&
      rep.published_basis != "2.1-rotation" && rep.published_basis != "2.1-vacuum") {
    rep.divergence = "A";
    rep.notes.push_back(
        "norm conditions on the first moments hold but no channel matches their direction");
  } else if (published_yes_alone && rep.modes == 2 && published_only_interval2) {
    rep.divergence = "B";
  } else {
    rep.divergence = "unexplained";
    rep.notes.push_back("published: " + to_string(rep.published) + ", solver: " +
                        to_string(rep.solver) + ", oracle: " + (rep.oracle_found ? "found" : "none"));
  }
  return rep;
}

}  // namespace cvgauss
