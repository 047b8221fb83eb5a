// Copyright 2026 The Spectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spectra {

enum class ErrorKind {
  InvalidArgument,
  NonFinite,
  ShapeMismatch,
  LengthMismatch,
  NonConvergence,
  NotAnEigenvalue,
  DefectivePair,
  NotNonnegative,
  NotIrreducible,
  RankDeficientX,
  NotInvariant,
  DegeneratePair,
  CollinearEigenvectors,
  NotConstantRowSums,
  ThresholdViolated,
  PostconditionFailed,
  AllCollinear,
  DomainError,
  CollinearTriple,
  NotConvex,
  GenerationFailed,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace spectra
