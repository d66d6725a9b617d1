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

// Gaussian states of one and two modes described by their first moment d and
// second moment V. Units are such that the vacuum has V = I, so a one-mode
// state is physical iff V > 0 and det V >= 1, and pure iff det V = 1.

#pragma once

#include <complex>
#include <optional>
#include <string>

#include "cvgauss/linalg.hpp"

namespace cvgauss {

/// Complex amplitude; used for displacements alpha and squeezing beta.
struct ComplexAmp {
  double re = 0.0;
  double im = 0.0;

  double abs() const { return std::hypot(re, im); }
  double arg() const { return std::atan2(im, re); }
};

/// First and second moments of a 1- or 2-mode Gaussian state.
///
/// Construction does not validate; use `validate_state` / `is_valid_state`
/// or the `make_*` constructors which only produce physical states.
struct GaussianState {
  int modes = 1;
  VecN d = VecN::Zero(2);
  MatN V = MatN::Identity(2, 2);

  GaussianState() = default;
  GaussianState(const Vec2& d1, const Mat2& v1) : modes(1), d(d1), V(v1) {}
  GaussianState(const Vec4& d2, const Mat4& v2) : modes(2), d(d2), V(v2) {}

  Vec2 d1() const { return d.head<2>(); }
  Mat2 V1() const { return V.topLeftCorner<2, 2>(); }
};

/// One-mode canonical parameters: V = (2 nbar + 1) R(theta) S(2r) R(theta)^t,
/// S(2r) = diag(e^{-2r}, e^{2r}), r >= 0, theta in [0, pi).
struct StandardForm1 {
  double nbar = 0.0;
  double r = 0.0;
  double theta = 0.0;
};

/// Two-mode standard form V = [[a I, C], [C, b I]] with C = diag(c1, c2).
struct StandardForm2 {
  double a = 1.0;
  double b = 1.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

GaussianState make_vacuum();
GaussianState make_thermal(double nbar);
GaussianState make_coherent(ComplexAmp alpha);
GaussianState make_displaced_squeezed(ComplexAmp alpha, ComplexAmp beta);
GaussianState make_two_mode_standard(const StandardForm2& sf, const Vec4& d = Vec4::Zero());
/// Two-mode squeezed vacuum: a = b = ch(2r), c1 = -c2 = sh(2r).
StandardForm2 tmsv_form(double r);
Mat4 standard_form_matrix(const StandardForm2& sf);

/// Name of the first violated physicality condition, or nullopt when valid.
std::optional<std::string> validate_state(const GaussianState& s);
bool is_valid_state(const GaussianState& s);
bool is_pure(const GaussianState& s);
bool is_incoherent(const GaussianState& s);

/// det A + det B + 2 det C over the 2x2 blocks of a 4x4 second moment.
double two_mode_delta(const Mat4& v);

/// Purity of a standard-form parameter set: ab - c1^2 > 0,
/// (ab - c1^2)(ab - c2^2) = 1 and a^2 + b^2 + 2 c1 c2 <= 2.
bool two_mode_pure_standard_check(const StandardForm2& sf);

/// Reads (a, b, c1, c2) off V when V is in standard form within tolerance.
std::optional<StandardForm2> standard_form_of(const MatN& v);

StandardForm1 standard_decomposition(const Mat2& v);
Mat2 reconstruct(const StandardForm1& sf);

/// Largest absolute difference between the moments of two states; infinite
/// when the mode counts differ.
double moment_residual(const GaussianState& a, const GaussianState& b);

/// tr(rho D(lambda)) for a Gaussian state; lam holds (Re, Im) per mode.
std::complex<double> char_function(const GaussianState& s, const VecN& lam);

}  // namespace cvgauss
