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

#ifndef UNIQSUB_CORPUS_H_
#define UNIQSUB_CORPUS_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>

#include "uniqsub/graph.h"

namespace uniqsub {

// Reads graph6 lines one at a time. Blank lines are ignored, as is a
// trailing carriage return. In strict mode a malformed line throws
// ParseError carrying its 1-based line number; with skip_bad it is counted
// and skipped instead.
class CorpusReader {
 public:
  CorpusReader(std::istream& in, bool skip_bad = false)
      : in_(in), skip_bad_(skip_bad) {}

  // The next graph, or nullopt at end of input.
  std::optional<Graph> Next();

  std::size_t line() const { return line_; }
  std::size_t bad_lines() const { return bad_lines_; }
  // Line number and message of the first skipped line.
  std::size_t first_bad_line() const { return first_bad_line_; }
  const std::string& first_bad_message() const { return first_bad_message_; }

 private:
  std::istream& in_;
  bool skip_bad_;
  std::size_t line_ = 0;
  std::size_t bad_lines_ = 0;
  std::size_t first_bad_line_ = 0;
  std::string first_bad_message_;
};

}  // namespace uniqsub

#endif  // UNIQSUB_CORPUS_H_
