// Copyright 2026 The uniqsub Authors
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

#ifndef UNIQSUB_ERRORS_H_
#define UNIQSUB_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uniqsub {

// Precondition violated by the caller (bad vertex, argument order, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed graph6 input. `offset` is the byte index where decoding failed;
// `line` is set by corpus ingestion (1-based, 0 when not applicable).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset,
             std::size_t line = 0)
      : std::runtime_error(message), offset_(offset), line_(line) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

// A cost guard refused the request; callers may override it explicitly.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uniqsub

#endif  // UNIQSUB_ERRORS_H_
