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


#ifndef CONCEPTLINK_COOC_H_
#define CONCEPTLINK_COOC_H_

#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conceptlink {

enum class CoocMode : uint8_t {
  // Each distinct concept pair counts once per text block.
  kPerBlock = 0,
  // Every pair of mentions with distinct concepts counts.
  kPerOccurrence = 1,
};

const char *CoocModeName(CoocMode mode);
CoocMode ParseCoocMode(std::string_view name);

// Sparse symmetric concept co-occurrence counts. Keys are unordered pairs
// stored as (smaller cui, larger cui); self pairs are never stored.
class CoocMatrix {
 public:
  using Pair = std::pair<std::string, std::string>;

  explicit CoocMatrix(CoocMode mode = CoocMode::kPerBlock) : mode_(mode) {}

  CoocMode mode() const { return mode_; }
  void set_mode(CoocMode mode) { mode_ = mode; }

  // Adds the mentions of one text block, given as the cuis of its
  // annotations in any order.
  void AddBlock(std::span<const std::string> cuis);

  // Adds `count` to the pair (a, b). Ignored for a == b.
  void Add(std::string_view a, std::string_view b, uint64_t count);

  uint64_t Count(std::string_view a, std::string_view b) const;

  // Concepts co-occurring with `cui`, by descending count then cui.
  std::vector<std::pair<std::string, uint64_t>> Top(std::string_view cui,
                                                    size_t k) const;

  // Adds all counts of `other`.
  void Merge(const CoocMatrix &other);

  // Writes `cui_a,cui_b,count` rows with cui_a < cui_b, sorted by pair.
  void ExportCsv(std::ostream &out) const;

  const std::map<Pair, uint64_t> &counts() const { return counts_; }
  size_t size() const { return counts_.size(); }
  bool operator==(const CoocMatrix &other) const = default;

 private:
  CoocMode mode_;
  std::map<Pair, uint64_t> counts_;
};

}  // namespace conceptlink

#endif  // CONCEPTLINK_COOC_H_
