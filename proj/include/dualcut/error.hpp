// Copyright 2026 The dualcut Authors
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

#ifndef DUALCUT_ERROR_HPP_
#define DUALCUT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace dualcut {

// Malformed instance, advice or report text. line() is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A well-formed instance that violates its connectivity requirement.
class InfeasibleInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its precondition (e.g. contracting a set
// that is not perfect).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exhaustive procedures refuse inputs above their configured size limit.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dualcut

#endif  // DUALCUT_ERROR_HPP_
