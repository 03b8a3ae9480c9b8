// Copyright 2026 The phasecomp Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phasecomp {

/// Malformed text input. `position()` is a 1-based column for literals and a
/// 1-based line for assembly sources.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A tape value would become negative.
class UnderflowError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// MARK on a marked cell or UNMARK on an empty one.
class StrictWriteError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An opcode that the selected engine cannot execute.
class WrongEngineError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace phasecomp
