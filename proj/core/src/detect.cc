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


#include "conceptlink/detect.h"

#include <algorithm>
#include <string>

#include "conceptlink/error.h"

namespace conceptlink {

const char *EmitModeName(EmitMode mode) {
  return mode == EmitMode::kLongest ? "longest" : "all";
}

EmitMode ParseEmitMode(std::string_view name) {
  if (name == "longest") return EmitMode::kLongest;
  if (name == "all") return EmitMode::kAll;
  throw InvalidArgument("unknown emit mode: " + std::string(name));
}

std::vector<Candidate> DetectCandidates(std::span<const Token> tokens,
                                        const ConceptDatabase &cdb,
                                        EmitMode mode, DetectStats *stats) {
  std::vector<Candidate> matches;
  uint64_t expansions = 0;
  for (size_t position = 0; position < tokens.size(); ++position) {
    int node = ConceptDatabase::kRootNode;
    size_t longest = matches.size();
    for (size_t last = position; last < tokens.size(); ++last) {
      ++expansions;
      node = cdb.Child(node, MatchKey(tokens[last]));
      if (node < 0) break;
      int name = cdb.NameAtNode(node);
      if (name >= 0) {
        Candidate c;
        c.first_token = position;
        c.last_token = last;
        c.start = tokens[position].start;
        c.end = tokens[last].end;
        c.name_id = static_cast<NameId>(name);
        if (mode == EmitMode::kAll || longest == matches.size()) {
          matches.push_back(c);
        } else {
          matches[longest] = c;
        }
      }
      if (!cdb.HasChildren(node)) break;
    }
  }
  if (stats != nullptr) stats->window_expansions += expansions;
  if (mode == EmitMode::kAll) return matches;

  // One match per start token remains; drop those inside an earlier match.
  std::vector<Candidate> kept;
  size_t covered_until = 0;
  for (const Candidate &c : matches) {
    if (!kept.empty() && c.last_token < covered_until) continue;
    kept.push_back(c);
    covered_until = std::max(covered_until, c.last_token + 1);
  }
  return kept;
}

}  // namespace conceptlink
