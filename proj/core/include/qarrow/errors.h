// Copyright 2026 The qarrow Authors
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

#ifndef QARROW_ERRORS_H
#define QARROW_ERRORS_H

#include <stdexcept>
#include <string>

namespace qarrow {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (bad parameter,
/// non-unit Bloch vector, readout of the wrong kind for a scheme, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

/// A Kraus operator or effect matrix that must be invertible is singular.
/// The time-reversal construction needs rank-2 operators.
class SingularOperatorError : public Error {
   public:
    using Error::Error;
};

/// A hand-crafted record has zero probability under the current state.
class ImpossibleRecordError : public Error {
   public:
    using Error::Error;
};

/// An iterative numeric procedure (root finding, quadrature) failed.
class NumericError : public Error {
   public:
    using Error::Error;
};

}  // namespace qarrow

#endif
