/*
  Copyright (c) 2026 the bandforms authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace bandforms {

// Error categories; codes line up with bandforms_status / CLI exit codes.
enum class ErrorCode { compute = 1, input = 2, mismatch = 3 };

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

// Malformed or out-of-contract input (bad grammar, invalid parameters).
class InputError : public Error {
public:
  explicit InputError(const std::string &msg) : Error(ErrorCode::input, msg) {}
};

// A brute-force search would exceed the configured enumeration cap.
class CapExceeded : public Error {
public:
  explicit CapExceeded(const std::string &msg)
      : Error(ErrorCode::compute, msg) {}
};

// An internal re-check failed, or a computation reached a state the
// underlying theory does not cover; never produces a silent wrong answer.
class ConsistencyError : public Error {
public:
  explicit ConsistencyError(const std::string &msg)
      : Error(ErrorCode::compute, msg) {}
};

// A vendored worked example did not reproduce its expected verdict.
class MismatchError : public Error {
public:
  explicit MismatchError(const std::string &msg)
      : Error(ErrorCode::mismatch, msg) {}
};

} // namespace bandforms
