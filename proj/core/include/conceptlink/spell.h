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


#ifndef CONCEPTLINK_SPELL_H_
#define CONCEPTLINK_SPELL_H_

#include <cstdint>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "conceptlink/normalize.h"
#include "conceptlink/strings.h"
#include "conceptlink/vocab.h"

namespace conceptlink {

struct SpellConfig {
  int max_edits_short = 1;
  int max_edits_long = 2;
  // Words shorter than this get max_edits_short; the rest max_edits_long.
  int length_threshold = 6;
  // Maximum number of cached corrections. Zero disables the cache.
  size_t cache_capacity = 1 << 16;

  int Budget(size_t word_length) const {
    return static_cast<int>(word_length) < length_threshold ? max_edits_short
                                                            : max_edits_long;
  }
  void Validate() const;
};

// Unrestricted Damerau-Levenshtein distance (insertions, deletions,
// substitutions, adjacent transpositions) capped at `limit`: any distance
// above the limit is reported as limit + 1.
int BoundedEditDistance(std::string_view a, std::string_view b, int limit);

// Norvig-style spelling corrector. Words are spelled against the vocabulary
// but corrected only towards words that occur in concept names. Candidate
// words are found through a symmetric-deletion index over the target words
// and verified with BoundedEditDistance, which yields exactly the set of
// target words reachable within the edit budget.
//
// The correction cache is the only mutable state and is guarded by a mutex,
// so one checker can be shared by several annotation threads.
class SpellChecker {
 public:
  SpellChecker(const Vocabulary &vocab, std::vector<std::string> targets,
               SpellConfig config = {});

  SpellChecker(const SpellChecker &) = delete;
  SpellChecker &operator=(const SpellChecker &) = delete;

  // Returns the corrected form of a token's norm. Abbreviation-shaped
  // tokens, tokens containing digits, and words already in the vocabulary
  // are returned unchanged.
  std::string Correct(const Token &token) const;
  std::string Correct(std::string_view norm, bool is_abbrev_shape) const;

  // Corrects norm in place for every token.
  void CorrectAll(std::vector<Token> &tokens) const;

  const SpellConfig &config() const { return config_; }
  bool IsTarget(std::string_view word) const;

 private:
  std::string Lookup(std::string_view word) const;
  static void Deletions(std::string_view word, int depth,
                        std::vector<std::string> *out);

  const Vocabulary &vocab_;
  SpellConfig config_;
  std::vector<std::string> targets_;
  std::unordered_set<std::string, StringHash, std::equal_to<>> target_set_;
  // (hash of a deletion variant, target id) for every string obtainable from
  // a target word by up to max_edits_long deletions. Sorted. Hash collisions
  // only add candidates, which the distance check then rejects.
  std::vector<std::pair<uint64_t, int>> deletes_;

  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, std::string, StringHash,
                             std::equal_to<>>
      cache_;
};

}  // namespace conceptlink

#endif  // CONCEPTLINK_SPELL_H_
