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


#include "conceptlink/cooc.h"

#include <algorithm>
#include <set>

#include "conceptlink/error.h"

namespace conceptlink {

const char *CoocModeName(CoocMode mode) {
  return mode == CoocMode::kPerBlock ? "per_block" : "per_occurrence";
}

CoocMode ParseCoocMode(std::string_view name) {
  if (name == "per_block" || name == "block") return CoocMode::kPerBlock;
  if (name == "per_occurrence" || name == "occurrence") {
    return CoocMode::kPerOccurrence;
  }
  throw InvalidArgument("unknown co-occurrence mode: " + std::string(name));
}

void CoocMatrix::Add(std::string_view a, std::string_view b, uint64_t count) {
  if (a == b || count == 0) return;
  if (b < a) std::swap(a, b);
  counts_[Pair(std::string(a), std::string(b))] += count;
}

void CoocMatrix::AddBlock(std::span<const std::string> cuis) {
  if (mode_ == CoocMode::kPerBlock) {
    std::set<std::string_view> distinct(cuis.begin(), cuis.end());
    for (auto i = distinct.begin(); i != distinct.end(); ++i) {
      for (auto j = std::next(i); j != distinct.end(); ++j) Add(*i, *j, 1);
    }
    return;
  }
  for (size_t i = 0; i < cuis.size(); ++i) {
    for (size_t j = i + 1; j < cuis.size(); ++j) Add(cuis[i], cuis[j], 1);
  }
}

uint64_t CoocMatrix::Count(std::string_view a, std::string_view b) const {
  if (b < a) std::swap(a, b);
  auto it = counts_.find(Pair(std::string(a), std::string(b)));
  return it == counts_.end() ? 0 : it->second;
}

std::vector<std::pair<std::string, uint64_t>> CoocMatrix::Top(
    std::string_view cui, size_t k) const {
  std::vector<std::pair<std::string, uint64_t>> result;
  for (const auto &[pair, count] : counts_) {
    if (pair.first == cui) {
      result.emplace_back(pair.second, count);
    } else if (pair.second == cui) {
      result.emplace_back(pair.first, count);
    }
  }
  std::sort(result.begin(), result.end(), [](const auto &x, const auto &y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });
  if (result.size() > k) result.resize(k);
  return result;
}

void CoocMatrix::Merge(const CoocMatrix &other) {
  for (const auto &[pair, count] : other.counts_) counts_[pair] += count;
}

void CoocMatrix::ExportCsv(std::ostream &out) const {
  out << "cui_a,cui_b,count\n";
  for (const auto &[pair, count] : counts_) {
    out << pair.first << ',' << pair.second << ',' << count << '\n';
  }
}

}  // namespace conceptlink
