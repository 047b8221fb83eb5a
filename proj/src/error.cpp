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

#include "spectra/error.hpp"

namespace spectra {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NotAnEigenvalue: return "NotAnEigenvalue";
    case ErrorKind::DefectivePair: return "DefectivePair";
    case ErrorKind::NotNonnegative: return "NotNonnegative";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::RankDeficientX: return "RankDeficientX";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::CollinearEigenvectors: return "CollinearEigenvectors";
    case ErrorKind::NotConstantRowSums: return "NotConstantRowSums";
    case ErrorKind::ThresholdViolated: return "ThresholdViolated";
    case ErrorKind::PostconditionFailed: return "PostconditionFailed";
    case ErrorKind::AllCollinear: return "AllCollinear";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::CollinearTriple: return "CollinearTriple";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace spectra
