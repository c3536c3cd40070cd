// Copyright 2026 The revsynth authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revsynth {

/// Base class for every domain error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a character offset for
/// expressions and a 1-based line number for line-oriented formats; the
/// message spells out which.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Register/variable width mismatch or overflow.
class WidthError : public Error {
 public:
  using Error::Error;
};

class NotBentError : public Error {
 public:
  using Error::Error;
};

// Raised by the verification oracles in the simulator.
class NotClassicalError : public Error {
 public:
  using Error::Error;
};

class NotBijectiveError : public Error {
 public:
  using Error::Error;
};

class NotDiagonalError : public Error {
 public:
  using Error::Error;
};

class AncillaRequiredError : public Error {
 public:
  using Error::Error;
};

class UnsupportedGateError : public Error {
 public:
  using Error::Error;
};

class NonDeterministicOutcomeError : public Error {
 public:
  using Error::Error;
};

}  // namespace revsynth
