/*
 * Copyright 2026 the ksym developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace ksym {

// Precondition and input failures. Mathematical check failures are never
// exceptions; they are carried in reports with witnesses.
enum class Errc {
  NonSymmetric,
  Degenerate,
  TableMismatch,
  DimensionTooSmall,
  IsotropicReflector,
  IsotropicVector,
  OddElement,
  ClosureBudgetExceeded,
  NotClosed,
  NotOrthonormal,
  NotComplexStructure,
  NoPositivePlane,
  NoIsotropicVector,
  SingularMatrix,
  InvalidInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace ksym
