// Copyright 2026 The Conceptlink Authors.
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


#ifndef CONCEPTLINK_DETECT_H_
#define CONCEPTLINK_DETECT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "conceptlink/cdb.h"
#include "conceptlink/normalize.h"

namespace conceptlink {

enum class EmitMode {
  // Keep the longest match per start token and drop matches nested inside
  // an earlier, longer match.
  kLongest,
  // Emit every match, including nested and overlapping ones.
  kAll,
};

const char *EmitModeName(EmitMode mode);
EmitMode ParseEmitMode(std::string_view name);

// A token span whose match keys form a name of the concept database.
struct Candidate {
  // Inclusive token range.
  size_t first_token = 0;
  size_t last_token = 0;
  // Byte range [start, end) in the document.
  size_t start = 0;
  size_t end = 0;
  NameId name_id = 0;

  size_t num_tokens() const { return last_token - first_token + 1; }
};

struct DetectStats {
  // Number of times the window grew by one token.
  uint64_t window_expansions = 0;
};

// Moving expanding window over the name index. Starting at every token, the
// window grows while its text is a name (recorded as a match) or a proper
// prefix of a longer name; otherwise the scan moves to the next start token.
// Candidates are ordered by first token, then by length.
std::vector<Candidate> DetectCandidates(std::span<const Token> tokens,
                                        const ConceptDatabase &cdb,
                                        EmitMode mode = EmitMode::kLongest,
                                        DetectStats *stats = nullptr);

}  // namespace conceptlink

#endif  // CONCEPTLINK_DETECT_H_
