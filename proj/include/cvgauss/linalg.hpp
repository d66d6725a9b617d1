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

// Small fixed-size linear algebra used throughout the library. Everything here
// is templated on the scalar type so the same routines serve double-precision
// decisions and higher-precision cross checks.
//
// Rotation convention: R(theta) = [[cos, sin], [-sin, cos]], so R(theta)
// rotates a column vector by -theta and R(a) R(b) = R(a + b).

#pragma once

#include <cmath>

#include <Eigen/Dense>

namespace cvgauss {

template <typename Scalar>
using Vec2T = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Mat2T = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using Vec4T = Eigen::Matrix<Scalar, 4, 1>;
template <typename Scalar>
using Mat4T = Eigen::Matrix<Scalar, 4, 4>;

using Vec2 = Vec2T<double>;
using Mat2 = Mat2T<double>;
using Vec4 = Vec4T<double>;
using Mat4 = Mat4T<double>;

// Vectors and matrices sized for one or two modes (2m entries, m <= 2).
using VecN = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 4, 1>;
using MatN = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;

template <typename Scalar>
Mat2T<Scalar> rotation(Scalar theta) {
  using std::cos;
  using std::sin;
  const Scalar c = cos(theta);
  const Scalar s = sin(theta);
  Mat2T<Scalar> r;
  r << c, s, -s, c;
  return r;
}

/// diag(1, -1) * R(theta); every orthogonal 2x2 matrix with det -1 has this form.
template <typename Scalar>
Mat2T<Scalar> reflection_rotation(Scalar theta) {
  Mat2T<Scalar> r = rotation(theta);
  r.row(1) *= Scalar(-1);
  return r;
}

/// R(theta) or diag(1,-1) R(theta) depending on `reflect`.
template <typename Scalar>
Mat2T<Scalar> orthogonal(Scalar theta, bool reflect) {
  return reflect ? reflection_rotation(theta) : rotation(theta);
}

template <typename Scalar>
Mat2T<Scalar> symplectic_form() {
  Mat2T<Scalar> w;
  w << Scalar(0), Scalar(1), Scalar(-1), Scalar(0);
  return w;
}

template <typename Derived>
Mat2T<typename Derived::Scalar> adjugate2(const Eigen::MatrixBase<Derived>& m) {
  Mat2T<typename Derived::Scalar> adj;
  adj << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return adj;
}

/// det A + det B + tr(adj(A) B), which equals det(A + B) for 2x2 matrices.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar det_sum_identity(const Eigen::MatrixBase<DerivedA>& a,
                                           const Eigen::MatrixBase<DerivedB>& b) {
  return a.determinant() + b.determinant() + (adjugate2(a) * b).trace();
}

template <typename Scalar>
struct Diagonalization2 {
  Mat2T<Scalar> u;    // proper rotation, u * V * u^t = diag(lambda1, lambda2)
  Scalar angle;       // u == rotation(angle)
  Scalar lambda1;     // larger eigenvalue
  Scalar lambda2;
};

/// Diagonalizes a symmetric 2x2 matrix by a rotation (det U = +1), eigenvalues
/// ordered lambda1 >= lambda2. An isotropic input yields U = I.
template <typename Derived>
Diagonalization2<typename Derived::Scalar> diagonalize_det1(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  using std::atan2;
  using std::hypot;
  const Scalar a = v(0, 0);
  const Scalar c = v(1, 1);
  const Scalar b = (v(0, 1) + v(1, 0)) / Scalar(2);
  const Scalar mean = (a + c) / Scalar(2);
  const Scalar radius = hypot((a - c) / Scalar(2), b);
  Diagonalization2<Scalar> out;
  // Leading eigenvector is (cos psi, sin psi); the first row of U is that vector.
  out.angle = atan2(Scalar(2) * b, a - c) / Scalar(2);
  out.u = rotation(out.angle);
  out.lambda1 = mean + radius;
  const Scalar det = a * c - b * b;
  out.lambda2 = out.lambda1 > Scalar(0) ? det / out.lambda1 : mean - radius;
  return out;
}

template <typename Derived>
typename Derived::Scalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? typename Derived::Scalar(0) : m.cwiseAbs().maxCoeff();
}

/// Maps an angle into [0, 2pi).
inline double wrap_two_pi(double theta) {
  const double two_pi = 2.0 * M_PI;
  double w = std::fmod(theta, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w -= two_pi;
  return w;
}

/// Angle phi with R(phi) * from parallel to `to` (same direction).
inline double rotation_angle_between(const Vec2& from, const Vec2& to) {
  return std::atan2(from.y(), from.x()) - std::atan2(to.y(), to.x());
}

}  // namespace cvgauss
