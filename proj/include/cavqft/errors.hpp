// Copyright 2026 The cavqft Authors
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

namespace cavqft {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A parameter violates a documented invariant (negative rate, bad probability, ...).
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

/// Cooperativity C <= 1, so the offset detuning sqrt(C^2 - 1) is not real.
class DegenerateCooperativity : public Error {
   public:
    using Error::Error;
};

/// A requested controlled phase is not reachable within the available Stark tuning.
class OutOfRange : public Error {
   public:
    using Error::Error;
};

class ArityMismatch : public Error {
   public:
    using Error::Error;
};

/// Post-selection removed (numerically) all of the state's weight.
class ZeroWeight : public Error {
   public:
    using Error::Error;
};

/// Post-selection operator whose largest eigenvalue is zero.
class DegenerateOperator : public Error {
   public:
    using Error::Error;
};

class InvalidTiming : public Error {
   public:
    using Error::Error;
};

/// A simulated output lies farther from the ideal output than the error budget allows.
class BoundViolation : public Error {
   public:
    using Error::Error;
};

/// Malformed program text, scenario config, or CLI input.
class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace cavqft
