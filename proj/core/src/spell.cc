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


#include "conceptlink/spell.h"

#include <algorithm>
#include <array>
#include <functional>

#include "conceptlink/error.h"

namespace conceptlink {

namespace {

uint64_t HashWord(std::string_view s) {
  return std::hash<std::string_view>()(s);
}

}  // namespace

void SpellConfig::Validate() const {
  if (max_edits_short < 0 || max_edits_long < 0) {
    throw InvalidArgument("spelling edit budgets must be non-negative");
  }
  if (max_edits_short > max_edits_long) {
    throw InvalidArgument("max_edits_short must not exceed max_edits_long");
  }
  if (length_threshold < 1) {
    throw InvalidArgument("spelling length threshold must be >= 1");
  }
}

int BoundedEditDistance(std::string_view a, std::string_view b, int limit) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  if (std::abs(n - m) > limit) return limit + 1;

  // Lowrance-Wagner recurrence for the unrestricted distance. Row/column 0
  // of the (n+2)x(m+2) table hold the sentinel n+m.
  const int inf = n + m;
  const int width = m + 2;
  std::vector<int> d((n + 2) * width);
  auto at = [&](int i, int j) -> int & { return d[i * width + j]; };
  at(0, 0) = inf;
  for (int i = 0; i <= n; ++i) {
    at(i + 1, 0) = inf;
    at(i + 1, 1) = i;
  }
  for (int j = 0; j <= m; ++j) {
    at(0, j + 1) = inf;
    at(1, j + 1) = j;
  }
  std::array<int, 256> last_row{};
  for (int i = 1; i <= n; ++i) {
    int last_match_col = 0;
    for (int j = 1; j <= m; ++j) {
      int i1 = last_row[static_cast<unsigned char>(b[j - 1])];
      int j1 = last_match_col;
      int cost = 1;
      if (a[i - 1] == b[j - 1]) {
        cost = 0;
        last_match_col = j;
      }
      at(i + 1, j + 1) = std::min({at(i, j) + cost, at(i + 1, j) + 1,
                                   at(i, j + 1) + 1,
                                   at(i1, j1) + (i - i1 - 1) + 1 + (j - j1 - 1)});
    }
    last_row[static_cast<unsigned char>(a[i - 1])] = i;
  }
  return std::min(at(n + 1, m + 1), limit + 1);
}

void SpellChecker::Deletions(std::string_view word, int depth,
                             std::vector<std::string> *out) {
  out->clear();
  out->emplace_back(word);
  size_t level_begin = 0;
  for (int d = 0; d < depth; ++d) {
    size_t level_end = out->size();
    for (size_t k = level_begin; k < level_end; ++k) {
      const std::string source = (*out)[k];
      for (size_t i = 0; i < source.size(); ++i) {
        // Deleting one character of a run gives the same string; only keep
        // the first position of each run.
        if (i > 0 && source[i] == source[i - 1]) continue;
        std::string variant = source.substr(0, i) + source.substr(i + 1);
        out->push_back(std::move(variant));
      }
    }
    level_begin = level_end;
  }
  std::sort(out->begin(), out->end());
  out->erase(std::unique(out->begin(), out->end()), out->end());
}

SpellChecker::SpellChecker(const Vocabulary &vocab,
                           std::vector<std::string> targets, SpellConfig config)
    : vocab_(vocab), config_(config) {
  config_.Validate();
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  targets_ = std::move(targets);
  target_set_.insert(targets_.begin(), targets_.end());

  std::vector<std::string> variants;
  for (int id = 0; id < static_cast<int>(targets_.size()); ++id) {
    Deletions(targets_[id], config_.max_edits_long, &variants);
    for (const std::string &v : variants) deletes_.emplace_back(HashWord(v), id);
  }
  std::sort(deletes_.begin(), deletes_.end());
  deletes_.erase(std::unique(deletes_.begin(), deletes_.end()), deletes_.end());
}

bool SpellChecker::IsTarget(std::string_view word) const {
  return target_set_.find(word) != target_set_.end();
}

std::string SpellChecker::Lookup(std::string_view word) const {
  const int budget = config_.Budget(word.size());
  std::vector<std::string> variants;
  Deletions(word, budget, &variants);

  std::vector<int> candidates;
  for (const std::string &v : variants) {
    uint64_t h = HashWord(v);
    auto lo = std::lower_bound(deletes_.begin(), deletes_.end(),
                               std::make_pair(h, 0));
    for (auto it = lo; it != deletes_.end() && it->first == h; ++it) {
      candidates.push_back(it->second);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  // Highest vocabulary count wins, then smaller distance, then the
  // lexicographically smaller word.
  int best = -1;
  uint64_t best_count = 0;
  int best_distance = 0;
  for (int id : candidates) {
    const std::string &target = targets_[id];
    int distance = BoundedEditDistance(word, target, budget);
    if (distance > budget) continue;
    uint64_t count = vocab_.count(target);
    bool better = best < 0 || count > best_count ||
                  (count == best_count && distance < best_distance) ||
                  (count == best_count && distance == best_distance &&
                   target < targets_[best]);
    if (better) {
      best = id;
      best_count = count;
      best_distance = distance;
    }
  }
  return best < 0 ? std::string(word) : targets_[best];
}

std::string SpellChecker::Correct(std::string_view norm,
                                  bool is_abbrev_shape) const {
  if (norm.empty() || is_abbrev_shape || HasDigit(norm) ||
      vocab_.Contains(norm) || IsTarget(norm)) {
    return std::string(norm);
  }
  if (config_.cache_capacity > 0) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(norm);
    if (it != cache_.end()) return it->second;
  }
  std::string corrected = Lookup(norm);
  if (config_.cache_capacity > 0) {
    std::lock_guard<std::mutex> lock(mu_);
    if (cache_.size() >= config_.cache_capacity) cache_.clear();
    cache_.emplace(std::string(norm), corrected);
  }
  return corrected;
}

std::string SpellChecker::Correct(const Token &token) const {
  return Correct(token.norm, token.is_abbrev_shape);
}

void SpellChecker::CorrectAll(std::vector<Token> &tokens) const {
  for (Token &token : tokens) token.norm = Correct(token);
}

}  // namespace conceptlink
