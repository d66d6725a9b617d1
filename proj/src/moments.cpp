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

#include "cvgauss/moments.hpp"

#include <limits>
#include <sstream>

#include "cvgauss/errors.hpp"
#include "cvgauss/tolerance.hpp"

namespace cvgauss {
namespace {

std::string fmt_num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

MatN block_symplectic_form(int modes) {
  MatN w = MatN::Zero(2 * modes, 2 * modes);
  for (int j = 0; j < modes; ++j) w.block<2, 2>(2 * j, 2 * j) = symplectic_form<double>();
  return w;
}

}  // namespace

GaussianState make_vacuum() { return GaussianState(Vec2(Vec2::Zero()), Mat2(Mat2::Identity())); }

GaussianState make_thermal(double nbar) {
  if (!(nbar >= 0.0)) {
    throw InvalidState("mean photon number nbar >= 0 violated (nbar = " + fmt_num(nbar) + ")");
  }
  return GaussianState(Vec2(Vec2::Zero()), Mat2((2.0 * nbar + 1.0) * Mat2::Identity()));
}

GaussianState make_coherent(ComplexAmp alpha) {
  return GaussianState(Vec2(2.0 * alpha.re, 2.0 * alpha.im), Mat2::Identity());
}

GaussianState make_displaced_squeezed(ComplexAmp alpha, ComplexAmp beta) {
  const double mag = beta.abs();
  const double phase = beta.arg();
  const double ch = std::cosh(2.0 * mag);
  const double sh = std::sinh(2.0 * mag);
  Mat2 v;
  v << ch + std::cos(phase) * sh, std::sin(phase) * sh,
       std::sin(phase) * sh, ch - std::cos(phase) * sh;
  return GaussianState(Vec2(2.0 * alpha.re, 2.0 * alpha.im), v);
}

Mat4 standard_form_matrix(const StandardForm2& sf) {
  Mat4 v = Mat4::Zero();
  v(0, 0) = v(1, 1) = sf.a;
  v(2, 2) = v(3, 3) = sf.b;
  v(0, 2) = v(2, 0) = sf.c1;
  v(1, 3) = v(3, 1) = sf.c2;
  return v;
}

StandardForm2 tmsv_form(double r) {
  return StandardForm2{std::cosh(2.0 * r), std::cosh(2.0 * r), std::sinh(2.0 * r),
                       -std::sinh(2.0 * r)};
}

GaussianState make_two_mode_standard(const StandardForm2& sf, const Vec4& d) {
  GaussianState s(d, standard_form_matrix(sf));
  if (auto why = validate_state(s)) throw InvalidState(*why);
  return s;
}

double two_mode_delta(const Mat4& v) {
  return v.topLeftCorner<2, 2>().determinant() + v.bottomRightCorner<2, 2>().determinant() +
         2.0 * v.topRightCorner<2, 2>().determinant();
}

std::optional<std::string> validate_state(const GaussianState& s) {
  const Tolerances& tol = tolerances();
  if (s.modes != 1 && s.modes != 2) return "mode count must be 1 or 2";
  const int n = 2 * s.modes;
  if (s.d.size() != n) return "first moment must have 2m entries";
  if (s.V.rows() != n || s.V.cols() != n) return "second moment must be 2m x 2m";
  if (!s.V.allFinite() || !s.d.allFinite()) return "moments must be finite";
  if (max_abs(s.V - s.V.transpose()) > tol.sym) return "V symmetric violated";

  const MatN sym = (s.V + s.V.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<MatN> eig(sym, Eigen::EigenvaluesOnly);
  if (!(eig.eigenvalues().minCoeff() > 0.0)) return "V > 0 violated (V not positive definite)";

  const double det = sym.determinant();
  if (det < 1.0 - tol.eq) return "det V >= 1 violated (det V = " + fmt_num(det) + ")";
  if (s.modes == 2) {
    const double delta = two_mode_delta(sym);
    if (delta > 1.0 + det + tol.eq) {
      return "Delta <= 1 + det V violated (Delta = " + fmt_num(delta) +
             ", det V = " + fmt_num(det) + ")";
    }
  }
  return std::nullopt;
}

bool is_valid_state(const GaussianState& s) { return !validate_state(s).has_value(); }

bool is_pure(const GaussianState& s) {
  return is_valid_state(s) && std::abs(s.V.determinant() - 1.0) <= tolerances().eq;
}

bool is_incoherent(const GaussianState& s) {
  if (!is_valid_state(s)) return false;
  const double tau = tolerances().eq;
  if (max_abs(s.d) > tau) return false;
  for (int j = 0; j < s.modes; ++j) {
    for (int k = 0; k < s.modes; ++k) {
      const Mat2 block = s.V.block<2, 2>(2 * j, 2 * k);
      if (j != k) {
        if (max_abs(block) > tau) return false;
        continue;
      }
      const double v = block(0, 0);
      if (std::abs(block(1, 1) - v) > tau || std::abs(block(0, 1)) > tau ||
          std::abs(block(1, 0)) > tau || v < 1.0 - tau) {
        return false;
      }
    }
  }
  return true;
}

bool two_mode_pure_standard_check(const StandardForm2& sf) {
  const double tau = tolerances().eq;
  const double ab = sf.a * sf.b;
  const double p1 = ab - sf.c1 * sf.c1;
  const double p2 = ab - sf.c2 * sf.c2;
  return p1 > -tau && std::abs(p1 * p2 - 1.0) <= tau &&
         sf.a * sf.a + sf.b * sf.b + 2.0 * sf.c1 * sf.c2 <= 2.0 + tau;
}

std::optional<StandardForm2> standard_form_of(const MatN& v) {
  if (v.rows() != 4 || v.cols() != 4) return std::nullopt;
  const double tau = tolerances().eq;
  const Mat2 a = v.topLeftCorner<2, 2>();
  const Mat2 b = v.bottomRightCorner<2, 2>();
  const Mat2 c = v.topRightCorner<2, 2>();
  const Mat2 ct = v.bottomLeftCorner<2, 2>();
  if (max_abs(a - a(0, 0) * Mat2::Identity()) > tau) return std::nullopt;
  if (max_abs(b - b(0, 0) * Mat2::Identity()) > tau) return std::nullopt;
  if (std::abs(c(0, 1)) > tau || std::abs(c(1, 0)) > tau) return std::nullopt;
  if (max_abs(c - ct.transpose()) > tau) return std::nullopt;
  return StandardForm2{a(0, 0), b(0, 0), c(0, 0), c(1, 1)};
}

StandardForm1 standard_decomposition(const Mat2& v) {
  const auto diag = diagonalize_det1(v);
  StandardForm1 sf;
  const double det = diag.lambda1 * diag.lambda2;
  sf.nbar = std::max(0.0, (std::sqrt(det) - 1.0) / 2.0);
  if (diag.lambda1 - diag.lambda2 <= tolerances().eq) return sf;
  sf.r = 0.25 * std::log(diag.lambda1 / diag.lambda2);
  // The large eigenvector (cos psi, sin psi) is column 2 of R(theta), i.e.
  // (sin theta, cos theta), so theta = pi/2 - psi modulo pi.
  double theta = std::fmod(M_PI / 2.0 - diag.angle, M_PI);
  if (theta < 0.0) theta += M_PI;
  if (theta >= M_PI) theta -= M_PI;
  sf.theta = theta;
  return sf;
}

Mat2 reconstruct(const StandardForm1& sf) {
  const Mat2 r = rotation(sf.theta);
  const Mat2 s = Vec2(std::exp(-2.0 * sf.r), std::exp(2.0 * sf.r)).asDiagonal();
  const Mat2 v = (2.0 * sf.nbar + 1.0) * r * s * r.transpose();
  return (v + v.transpose()) / 2.0;
}

double moment_residual(const GaussianState& a, const GaussianState& b) {
  if (a.modes != b.modes || a.d.size() != b.d.size() || a.V.rows() != b.V.rows()) {
    return std::numeric_limits<double>::infinity();
  }
  return std::max(max_abs(a.d - b.d), max_abs(a.V - b.V));
}

std::complex<double> char_function(const GaussianState& s, const VecN& lam) {
  if (lam.size() != 2 * s.modes) throw ModeMismatch("lambda must have 2m entries");
  const MatN w = block_symplectic_form(s.modes);
  const double quad = lam.dot(w * s.V * w.transpose() * lam);
  const double lin = (w * s.d).dot(lam);
  return std::exp(std::complex<double>(-0.25 * quad, -lin));
}

}  // namespace cvgauss
