// Copyright 2026 The lazyeq Authors
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

#ifndef LAZYEQ_ERROR_HPP_
#define LAZYEQ_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lazyeq {

enum class ErrorKind {
  kUsage,
  kParse,
  kValidation,
  kPrecondition,
  kResourceCap,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

// Exit code reported by the command-line tool for an error of this kind.
inline int ExitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
      return 1;
    case ErrorKind::kParse:
      return 2;
    case ErrorKind::kValidation:
    case ErrorKind::kPrecondition:
      return 3;
    case ErrorKind::kResourceCap:
      return 4;
  }
  return 1;
}

}  // namespace lazyeq

#endif  // LAZYEQ_ERROR_HPP_
