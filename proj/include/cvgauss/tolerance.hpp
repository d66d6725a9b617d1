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

#pragma once

namespace cvgauss {

/// Process-wide comparison tolerances.
struct Tolerances {
  double sym = 1e-10;  // symmetry of second moments
  double eq = 1e-9;    // equalities and validity margins
};

const Tolerances& tolerances();
void set_tolerances(const Tolerances& tol);

/// Restores the previous tolerances on scope exit.
class ScopedTolerances {
 public:
  explicit ScopedTolerances(const Tolerances& tol);
  ~ScopedTolerances();
  ScopedTolerances(const ScopedTolerances&) = delete;
  ScopedTolerances& operator=(const ScopedTolerances&) = delete;

 private:
  Tolerances saved_;
};

}  // namespace cvgauss
