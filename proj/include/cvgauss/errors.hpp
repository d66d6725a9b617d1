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

#include <stdexcept>
#include <string>

namespace cvgauss {

/// Moments that violate a physicality condition. The message names the
/// violated inequality.
class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Channel parameters below the incoherence/physicality bound on omega.
class InvalidChannel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ModeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotPure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside a criterion's standing assumptions (equal eigenvalues,
/// vanishing first moment, vanishing correlation block).
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotStandardForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cvgauss
