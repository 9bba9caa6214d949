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

#include "uniqsub/corpus.h"

#include "uniqsub/errors.h"

namespace uniqsub {

std::optional<Graph> CorpusReader::Next() {
  std::string text;
  while (std::getline(in_, text)) {
    ++line_;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    try {
      return ParseGraph6(text);
    } catch (const ParseError& e) {
      const std::string message =
          "line " + std::to_string(line_) + ": " + e.what();
      if (!skip_bad_) throw ParseError(message, e.offset(), line_);
      if (bad_lines_++ == 0) {
        first_bad_line_ = line_;
        first_bad_message_ = message;
      }
    }
  }
  return std::nullopt;
}

}  // namespace uniqsub
