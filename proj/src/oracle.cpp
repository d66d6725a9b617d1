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

#include "cvgauss/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <tuple>
#include <vector>

#include <unsupported/Eigen/LevenbergMarquardt>
#include <unsupported/Eigen/NumericalDiff>

#include "cvgauss/errors.hpp"

namespace cvgauss {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kRefineHalfWidth = 10;

struct Candidate {
  double residual;
  int combo;
  long index;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
  return std::tie(a.residual, a.combo, a.index) < std::tie(b.residual, b.combo, b.index);
}

/// Indices of grid local minima (periodic in theta, open in t), best first.
void collect_local_minima(const std::vector<double>& grid, int theta_steps, int t_points, int combo,
                          std::vector<Candidate>& out) {
  for (int i = 0; i < theta_steps; ++i) {
    const int ip = (i + 1) % theta_steps;
    const int im = (i + theta_steps - 1) % theta_steps;
    for (int j = 0; j < t_points; ++j) {
      const long idx = static_cast<long>(i) * t_points + j;
      const double r = grid[idx];
      if (!std::isfinite(r)) continue;
      if (r > grid[static_cast<long>(ip) * t_points + j]) continue;
      if (r > grid[static_cast<long>(im) * t_points + j]) continue;
      if (j > 0 && r > grid[idx - 1]) continue;
      if (j + 1 < t_points && r > grid[idx + 1]) continue;
      out.push_back({r, combo, idx});
    }
  }
}

void keep_best(std::vector<Candidate>& c, int k) {
  std::sort(c.begin(), c.end(), candidate_less);
  if (static_cast<int>(c.size()) > k) c.resize(k);
}

// --- one mode ---------------------------------------------------------------

class OneModeProblem {
 public:
  OneModeProblem(const GaussianState& rho, const GaussianState& sigma)
      : v1_(rho.V1()), d1_(rho.d1()), v2_(sigma.V1()), d2_(sigma.d1()) {}

  struct Rotated {
    Mat2 m;  // O V1 O^t
    Vec2 od;  // O d1
    double det;
  };

  Rotated rotate(bool reflect, double theta) const {
    const Mat2 o = orthogonal(theta, reflect);
    return {o * v1_ * o.transpose(), o * d1_, reflect ? -1.0 : 1.0};
  }

  double solve_omega(const Rotated& r, double t) const {
    const double t2 = t * t;
    const double ls = (v2_.trace() - t2 * r.m.trace()) / 2.0;
    return std::max(ls, std::abs(t2 * r.det - 1.0));
  }

  double residual(const Rotated& r, double t, Eigen::VectorXd* vec = nullptr) const {
    const double t2 = t * t;
    const double omega = solve_omega(r, t);
    const double r0 = t2 * r.m(0, 0) + omega - v2_(0, 0);
    const double r1 = t2 * r.m(0, 1) - v2_(0, 1);
    const double r2 = t2 * r.m(1, 1) + omega - v2_(1, 1);
    const double r3 = t * r.od(0) - d2_(0);
    const double r4 = t * r.od(1) - d2_(1);
    if (vec) {
      vec->resize(5);
      *vec << r0, r1, r2, r3, r4;
    }
    return std::max({std::abs(r0), std::abs(r1), std::abs(r2), std::abs(r3), std::abs(r4)});
  }

 private:
  Mat2 v1_;
  Vec2 d1_;
  Mat2 v2_;
  Vec2 d2_;
};

struct OneModeFunctor : Eigen::DenseFunctor<double> {
  OneModeFunctor(const OneModeProblem* p, bool reflect)
      : Eigen::DenseFunctor<double>(2, 5), problem(p), reflect(reflect) {}

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    problem->residual(problem->rotate(reflect, x(0)), x(1), &f);
    return 0;
  }

  const OneModeProblem* problem;
  bool reflect;
};

OneModeIGO normalized_channel(bool reflect, double theta, double t, double omega) {
  if (t < 0.0) {
    t = -t;
    theta += M_PI;
  }
  return OneModeIGO{t, wrap_two_pi(theta), reflect, omega};
}

// --- two modes --------------------------------------------------------------

/// One (block type, reflect_p, reflect_q) branch of the two-mode search. The
/// block p maps input mode in_p to output mode 1; block q maps the other
/// input mode to output mode 2 and is parametrized as u E1 + v E2.
class TwoModeBranch {
 public:
  TwoModeBranch(const GaussianState& rho, const GaussianState& sigma, IgoType type,
                bool reflect_p, bool reflect_q)
      : type_(type), reflect_p_(reflect_p), reflect_q_(reflect_q) {
    in_p_ = type == IgoType::I ? 0 : 1;
    in_q_ = 1 - in_p_;
    v_pp_ = rho.V.block<2, 2>(2 * in_p_, 2 * in_p_);
    v_qq_ = rho.V.block<2, 2>(2 * in_q_, 2 * in_q_);
    v_pq_ = rho.V.block<2, 2>(2 * in_p_, 2 * in_q_);
    d_p_ = rho.d.segment<2>(2 * in_p_);
    d_q_ = rho.d.segment<2>(2 * in_q_);
    t00_ = sigma.V.block<2, 2>(0, 0);
    t11_ = sigma.V.block<2, 2>(2, 2);
    t01_ = sigma.V.block<2, 2>(0, 2);
    e0_ = sigma.d.segment<2>(0);
    e1_ = sigma.d.segment<2>(2);
    if (reflect_q) {
      basis1_ << 1, 0, 0, -1;
      basis2_ << 0, 1, 1, 0;
    } else {
      basis1_ << 1, 0, 0, 1;
      basis2_ << 0, 1, -1, 0;
    }
    q11_ = basis1_ * v_qq_ * basis1_.transpose();
    q12_ = basis1_ * v_qq_ * basis2_.transpose() + basis2_ * v_qq_ * basis1_.transpose();
    q22_ = basis2_ * v_qq_ * basis2_.transpose();
    f1_ = basis1_ * d_q_;
    f2_ = basis2_ * d_q_;
    det_p_ = reflect_p ? -1.0 : 1.0;
    det_q_ = reflect_q ? -1.0 : 1.0;
  }

  struct PBlock {
    Mat2 m;   // O_p V_pp O_p^t
    Vec2 od;  // O_p d_p
    Mat2 k1;  // O_p V_pq E1^t
    Mat2 k2;  // O_p V_pq E2^t
    double k11, k12, k22, kb1, kb2;
  };

  PBlock prepare(double theta_p) const {
    const Mat2 o = orthogonal(theta_p, reflect_p_);
    const Mat2 g = o * v_pq_;
    PBlock p;
    p.m = o * v_pp_ * o.transpose();
    p.od = o * d_p_;
    p.k1 = g * basis1_.transpose();
    p.k2 = g * basis2_.transpose();
    p.k11 = p.k1.cwiseProduct(p.k1).sum();
    p.k12 = p.k1.cwiseProduct(p.k2).sum();
    p.k22 = p.k2.cwiseProduct(p.k2).sum();
    p.kb1 = p.k1.cwiseProduct(t01_).sum();
    p.kb2 = p.k2.cwiseProduct(t01_).sum();
    return p;
  }

  /// Least-squares (u, v) for block q given block p; false when the linear
  /// equations do not determine it (no coupling and no first moment).
  bool solve_q(const PBlock& p, double tp, double* u, double* v) const {
    const double tp2 = tp * tp;
    const double g00 = tp2 * p.k11 + f1_.squaredNorm();
    const double g01 = tp2 * p.k12 + f1_.dot(f2_);
    const double g11 = tp2 * p.k22 + f2_.squaredNorm();
    const double b0 = tp * p.kb1 + f1_.dot(e1_);
    const double b1 = tp * p.kb2 + f2_.dot(e1_);
    const double det = g00 * g11 - g01 * g01;
    const double scale = g00 + g11;
    if (!(scale > 0.0) || det <= 1e-12 * scale * scale) return false;
    *u = (g11 * b0 - g01 * b1) / det;
    *v = (g00 * b1 - g01 * b0) / det;
    return true;
  }

  /// Residual vector (14 entries) and omegas for explicit block parameters.
  double residual(const PBlock& p, double tp, double u, double v, double* omega0, double* omega1,
                  Eigen::VectorXd* vec = nullptr) const {
    const double tp2 = tp * tp;
    const double tq2 = u * u + v * v;
    const Mat2 mq = u * u * q11_ + u * v * q12_ + v * v * q22_;
    const double w0 = std::max((t00_.trace() - tp2 * p.m.trace()) / 2.0,
                               std::abs(1.0 - tp2 * det_p_));
    const double w1 = std::max((t11_.trace() - mq.trace()) / 2.0, std::abs(1.0 - tq2 * det_q_));
    const Mat2 r00 = tp2 * p.m + w0 * Mat2::Identity() - t00_;
    const Mat2 r11 = mq + w1 * Mat2::Identity() - t11_;
    const Mat2 r01 = tp * (u * p.k1 + v * p.k2) - t01_;
    const Vec2 rd0 = tp * p.od - e0_;
    const Vec2 rd1 = u * f1_ + v * f2_ - e1_;
    if (omega0) *omega0 = w0;
    if (omega1) *omega1 = w1;
    if (vec) {
      vec->resize(14);
      *vec << r00(0, 0), r00(0, 1), r00(1, 1), r11(0, 0), r11(0, 1), r11(1, 1), r01(0, 0),
          r01(0, 1), r01(1, 0), r01(1, 1), rd0(0), rd0(1), rd1(0), rd1(1);
    }
    return std::max({max_abs(r00), max_abs(r11), max_abs(r01), max_abs(rd0), max_abs(rd1)});
  }

  /// Residual of block q alone (used when the coupling does not fix it).
  double q_only_residual(double theta_q, double tq) const {
    const double u = tq * std::cos(theta_q);
    const double v = tq * std::sin(theta_q);
    const Mat2 mq = u * u * q11_ + u * v * q12_ + v * v * q22_;
    const double w1 =
        std::max((t11_.trace() - mq.trace()) / 2.0, std::abs(1.0 - tq * tq * det_q_));
    return std::max(max_abs(mq + w1 * Mat2::Identity() - t11_), max_abs(u * f1_ + v * f2_ - e1_));
  }

  TwoModeIGO channel(double theta_p, double tp, double u, double v, double omega0,
                     double omega1) const {
    if (tp < 0.0) {
      tp = -tp;
      theta_p += M_PI;
    }
    const double tq = std::hypot(u, v);
    const double theta_q = tq > 0.0 ? std::atan2(v, u) : 0.0;
    TwoModeIGO g;
    g.block_type = type_;
    g.blocks[in_p_] = IgoBlock{tp, wrap_two_pi(theta_p), reflect_p_, 0.0};
    g.blocks[in_q_] = IgoBlock{tq, wrap_two_pi(theta_q), reflect_q_, 0.0};
    g.blocks[0].omega = omega0;
    g.blocks[1].omega = omega1;
    return g;
  }

 private:
  IgoType type_;
  bool reflect_p_;
  bool reflect_q_;
  int in_p_ = 0;
  int in_q_ = 1;
  Mat2 v_pp_, v_qq_, v_pq_;
  Vec2 d_p_, d_q_;
  Mat2 t00_, t11_, t01_;
  Vec2 e0_, e1_;
  Mat2 basis1_, basis2_;
  Mat2 q11_, q12_, q22_;
  Vec2 f1_, f2_;
  double det_p_ = 1.0;
  double det_q_ = 1.0;
};

struct TwoModeFunctor : Eigen::DenseFunctor<double> {
  explicit TwoModeFunctor(const TwoModeBranch* b) : Eigen::DenseFunctor<double>(4, 14), branch(b) {}

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    const auto p = branch->prepare(x(0));
    branch->residual(p, x(1), x(2), x(3), nullptr, nullptr, &f);
    return 0;
  }

  const TwoModeBranch* branch;
};

template <typename Functor>
void polish(Functor functor, Eigen::VectorXd& x) {
  Eigen::NumericalDiff<Functor, Eigen::Central> diff(functor);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<Functor, Eigen::Central>> lm(diff);
  lm.setMaxfev(400 * static_cast<int>(x.size()));
  lm.setXtol(1e-15);
  lm.setFtol(1e-15);
  lm.minimize(x);
}

void require_modes(const GaussianState& s, int modes, const char* who) {
  if (s.modes != modes) {
    throw ModeMismatch(std::string(who) + " expects " + std::to_string(modes) + "-mode states");
  }
}

}  // namespace

std::optional<std::string> SearchConfig::check() const {
  if (theta_steps <= 0 || t_steps <= 0 || refine_rounds < 0 || candidates <= 0) {
    return "grid sizes must be positive";
  }
  if (!(t_max > 0.0)) return "t_max must be positive";
  if (!(tol >= 100.0 * std::numeric_limits<double>::epsilon())) {
    return "tol must be at least 100 machine epsilons";
  }
  return std::nullopt;
}

OracleResult1 oracle_search1(const GaussianState& rho, const GaussianState& sigma,
                             const SearchConfig& cfg) {
  require_modes(rho, 1, "oracle_search1");
  require_modes(sigma, 1, "oracle_search1");
  if (auto why = cfg.check()) throw std::invalid_argument(*why);

  const OneModeProblem problem(rho, sigma);
  const int t_points = cfg.t_steps + 1;
  const double theta_step = 2.0 * M_PI / cfg.theta_steps;
  const double t_step = cfg.t_max / cfg.t_steps;

  std::vector<Candidate> candidates;
  std::vector<double> grid(static_cast<std::size_t>(cfg.theta_steps) * t_points);
  for (int combo = cfg.reflections_only ? 1 : 0; combo < 2; ++combo) {
    const bool reflect = combo == 1;
    for (int i = 0; i < cfg.theta_steps; ++i) {
      const auto rot = problem.rotate(reflect, i * theta_step);
      for (int j = 0; j < t_points; ++j) {
        grid[static_cast<std::size_t>(i) * t_points + j] = problem.residual(rot, j * t_step);
      }
    }
    collect_local_minima(grid, cfg.theta_steps, t_points, combo, candidates);
  }
  keep_best(candidates, cfg.candidates);

  OracleResult1 result;
  result.residual = kInf;
  for (const Candidate& c : candidates) {
    const bool reflect = c.combo == 1;
    double theta = (c.index / t_points) * theta_step;
    double t = (c.index % t_points) * t_step;
    double best = c.residual;
    double dth = theta_step;
    double dt = t_step;
    for (int round = 0; round < cfg.refine_rounds; ++round) {
      dth /= 10.0;
      dt /= 10.0;
      const double th0 = theta;
      const double t0 = t;
      for (int k = -kRefineHalfWidth; k <= kRefineHalfWidth; ++k) {
        const auto rot = problem.rotate(reflect, th0 + k * dth);
        for (int l = -kRefineHalfWidth; l <= kRefineHalfWidth; ++l) {
          const double tt = t0 + l * dt;
          if (tt < 0.0) continue;
          const double r = problem.residual(rot, tt);
          if (r < best) {
            best = r;
            theta = th0 + k * dth;
            t = tt;
          }
        }
      }
    }
    Eigen::VectorXd x(2);
    x << theta, t;
    polish(OneModeFunctor(&problem, reflect), x);
    const auto rot = problem.rotate(reflect, x(0));
    const OneModeIGO g = normalized_channel(reflect, x(0), x(1), problem.solve_omega(rot, x(1)));
    if (validate_igo1(g)) continue;
    const double r = moment_residual(apply1(g, rho), sigma);
    if (r < result.residual) result.residual = r;
    if (r < cfg.tol) {
      result.channel = g;
      result.residual = r;
      return result;
    }
  }
  return result;
}

OracleResult2 oracle_search2(const GaussianState& rho, const GaussianState& sigma,
                             const SearchConfig& cfg) {
  require_modes(rho, 2, "oracle_search2");
  require_modes(sigma, 2, "oracle_search2");
  if (auto why = cfg.check()) throw std::invalid_argument(*why);

  const int t_points = cfg.t_steps + 1;
  const double theta_step = 2.0 * M_PI / cfg.theta_steps;
  const double t_step = cfg.t_max / cfg.t_steps;

  std::vector<TwoModeBranch> branches;
  for (IgoType type : {IgoType::I, IgoType::II}) {
    for (int rp = 0; rp < 2; ++rp) {
      for (int rq = 0; rq < 2; ++rq) {
        if (cfg.reflections_only && rp == 0 && rq == 0) continue;
        branches.emplace_back(rho, sigma, type, rp == 1, rq == 1);
      }
    }
  }

  // Per branch, the best q block on its own; used wherever block p leaves the
  // linear equations for q undetermined.
  std::vector<std::pair<double, double>> q_fallback(branches.size(), {0.0, 0.0});
  std::vector<bool> q_fallback_ready(branches.size(), false);
  auto fallback_for = [&](std::size_t b) {
    if (!q_fallback_ready[b]) {
      double best = kInf;
      for (int i = 0; i < cfg.theta_steps; ++i) {
        for (int j = 0; j < t_points; ++j) {
          const double r = branches[b].q_only_residual(i * theta_step, j * t_step);
          if (r < best) {
            best = r;
            q_fallback[b] = {j * t_step * std::cos(i * theta_step),
                             j * t_step * std::sin(i * theta_step)};
          }
        }
      }
      q_fallback_ready[b] = true;
    }
    return q_fallback[b];
  };
  auto solve_q = [&](std::size_t b, const TwoModeBranch::PBlock& p, double tp, double* u,
                     double* v) {
    if (!branches[b].solve_q(p, tp, u, v)) std::tie(*u, *v) = fallback_for(b);
  };

  std::vector<Candidate> candidates;
  std::vector<double> grid(static_cast<std::size_t>(cfg.theta_steps) * t_points);
  for (std::size_t b = 0; b < branches.size(); ++b) {
    for (int i = 0; i < cfg.theta_steps; ++i) {
      const auto p = branches[b].prepare(i * theta_step);
      for (int j = 0; j < t_points; ++j) {
        double u, v;
        solve_q(b, p, j * t_step, &u, &v);
        grid[static_cast<std::size_t>(i) * t_points + j] =
            branches[b].residual(p, j * t_step, u, v, nullptr, nullptr);
      }
    }
    collect_local_minima(grid, cfg.theta_steps, t_points, static_cast<int>(b), candidates);
  }
  keep_best(candidates, cfg.candidates);

  OracleResult2 result;
  result.residual = kInf;
  for (const Candidate& c : candidates) {
    const std::size_t b = static_cast<std::size_t>(c.combo);
    const TwoModeBranch& branch = branches[b];
    double theta = (c.index / t_points) * theta_step;
    double t = (c.index % t_points) * t_step;
    double best = c.residual;
    double dth = theta_step;
    double dt = t_step;
    for (int round = 0; round < cfg.refine_rounds; ++round) {
      dth /= 10.0;
      dt /= 10.0;
      const double th0 = theta;
      const double t0 = t;
      for (int k = -kRefineHalfWidth; k <= kRefineHalfWidth; ++k) {
        const auto p = branch.prepare(th0 + k * dth);
        for (int l = -kRefineHalfWidth; l <= kRefineHalfWidth; ++l) {
          const double tt = t0 + l * dt;
          if (tt < 0.0) continue;
          double u, v;
          solve_q(b, p, tt, &u, &v);
          const double r = branch.residual(p, tt, u, v, nullptr, nullptr);
          if (r < best) {
            best = r;
            theta = th0 + k * dth;
            t = tt;
          }
        }
      }
    }
    double u, v;
    solve_q(b, branch.prepare(theta), t, &u, &v);
    Eigen::VectorXd x(4);
    x << theta, t, u, v;
    polish(TwoModeFunctor(&branch), x);
    double w0, w1;
    branch.residual(branch.prepare(x(0)), x(1), x(2), x(3), &w0, &w1);
    const TwoModeIGO g = branch.channel(x(0), x(1), x(2), x(3), w0, w1);
    if (validate_igo2(g)) continue;
    const double r = moment_residual(apply2(g, rho), sigma);
    if (r < result.residual) result.residual = r;
    if (r < cfg.tol) {
      result.channel = g;
      result.residual = r;
      return result;
    }
  }
  return result;
}

// --- generators ---------------------------------------------------------------

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

ComplexAmp polar_amp(std::mt19937_64& rng, double lo, double hi) {
  const double mag = uniform(rng, lo, hi);
  const double phase = uniform(rng, 0.0, 2.0 * M_PI);
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

double random_slack(std::mt19937_64& rng) {
  // A quarter of the channels sit exactly on the validity bound.
  return coin(rng, 0.25) ? 0.0 : uniform(rng, 0.0, 1.0);
}

}  // namespace

GaussianState random_state1(Mixedness mixedness, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  bool pure = mixedness == Mixedness::pure;
  if (mixedness == Mixedness::any) pure = coin(rng);
  if (pure) {
    const ComplexAmp alpha = polar_amp(rng, 0.0, 2.0);
    const ComplexAmp beta = polar_amp(rng, 0.0, 2.0);
    return make_displaced_squeezed(alpha, beta);
  }
  StandardForm1 sf;
  sf.nbar = uniform(rng, 0.01, 3.0);
  sf.r = uniform(rng, 0.0, 1.0);
  sf.theta = uniform(rng, 0.0, M_PI);
  const ComplexAmp alpha = polar_amp(rng, 0.0, 2.0);
  return GaussianState(Vec2(2.0 * alpha.re, 2.0 * alpha.im), reconstruct(sf));
}

GaussianState random_coherent(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return make_coherent(polar_amp(rng, 0.1, 2.0));
}

GaussianState random_state2_standard(bool pure, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  StandardForm2 sf = tmsv_form(uniform(rng, 0.1, 1.2));
  if (!pure) {
    const double nu = uniform(rng, 1.05, 3.0);
    sf = StandardForm2{nu * sf.a, nu * sf.b, nu * sf.c1, nu * sf.c2};
  }
  Vec4 d;
  for (int k = 0; k < 4; ++k) d(k) = uniform(rng, -2.0, 2.0);
  return make_two_mode_standard(sf, d);
}

OneModeIGO random_igo1(IgoType type, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  OneModeIGO g;
  g.t = uniform(rng, 0.2, 1.8);
  g.theta = uniform(rng, 0.0, 2.0 * M_PI);
  g.reflect = type == IgoType::II;
  g.omega = g.omega_bound() + random_slack(rng);
  return g;
}

TwoModeIGO random_igo2(IgoType type, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TwoModeIGO g;
  g.block_type = type;
  for (IgoBlock& b : g.blocks) {
    b.t = uniform(rng, 0.2, 1.8);
    b.theta = uniform(rng, 0.0, 2.0 * M_PI);
    b.reflect = coin(rng);
  }
  for (int j = 0; j < 2; ++j) g.blocks[j].omega = g.omega_bound(j) + random_slack(rng);
  return g;
}

ForwardInstance forward_instance(ForwardKind kind, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t state_seed = rng();
  const std::uint64_t channel_seed = rng();
  switch (kind) {
    case ForwardKind::one_mode_type1:
    case ForwardKind::one_mode_type2: {
      const GaussianState rho = random_state1(Mixedness::any, state_seed);
      const OneModeIGO g = random_igo1(
          kind == ForwardKind::one_mode_type1 ? IgoType::I : IgoType::II, channel_seed);
      return {rho, g, apply1(g, rho)};
    }
    case ForwardKind::two_mode_type1: {
      const GaussianState rho = random_state2_standard(coin(rng), state_seed);
      const TwoModeIGO g = random_igo2(IgoType::I, channel_seed);
      return {rho, g, apply2(g, rho)};
    }
    case ForwardKind::two_mode_pure_standard: {
      const GaussianState rho = random_state2_standard(true, state_seed);
      TwoModeIGO g;
      g.block_type = coin(rng) ? IgoType::I : IgoType::II;
      const double theta = uniform(rng, 0.0, 2.0 * M_PI);
      g.blocks[0] = IgoBlock{1.0, theta, false, 0.0};
      g.blocks[1] = IgoBlock{1.0, -theta + (coin(rng) ? M_PI : 0.0), false, 0.0};
      return {rho, g, apply2(g, rho)};
    }
  }
  throw std::invalid_argument("unknown forward instance kind");
}

}  // namespace cvgauss
