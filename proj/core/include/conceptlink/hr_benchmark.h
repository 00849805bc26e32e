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


#ifndef CONCEPTLINK_HR_BENCHMARK_H_
#define CONCEPTLINK_HR_BENCHMARK_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "conceptlink/cdb.h"
#include "conceptlink/context.h"
#include "conceptlink/jsonl.h"
#include "conceptlink/vocab.h"

namespace conceptlink {

// Synthetic version of the "how many training examples are enough"
// experiment: two concepts with unique full names ("heart rate", "hazard
// ratio") that share the ambiguous abbreviation "HR". Training documents use
// the full names; test documents use only "HR".
//
// Context words come from three pools: words specific to each concept and a
// shared pool. A context word is drawn from the concept's own pool, the
// other concept's pool or the shared pool with the given probabilities, so
// the two context distributions overlap partially. Like real embeddings,
// words of one topic point in similar directions.
struct HrBenchmarkOptions {
  uint64_t seed = 0;
  int train_per_concept = 30;
  int test_mentions = 174;
  int dim = 32;
  int words_per_pool = 40;
  int shared_words = 60;
  double p_own = 0.40;
  double p_other = 0.15;
  // Word vectors of a concept-specific pool are a shared topic direction
  // plus unit Gaussian noise; this is the topic's weight. Shared words are
  // pure noise.
  double topic_weight = 1.0;
  // Words on each side of a mention.
  int context_words = 10;
};

inline constexpr char kHeartRateCui[] = "C0018810";
inline constexpr char kHazardRatioCui[] = "C2985465";

struct HrBenchmarkData {
  ConceptDatabase cdb;
  Vocabulary vocab;
  std::vector<std::string> train_heart_rate;
  std::vector<std::string> train_hazard_ratio;
  std::vector<std::string> test_texts;
  // Gold annotation of "HR" in each test text; document ids are "test-<i>".
  std::vector<AnnotatedDocument> gold;
};

HrBenchmarkData GenerateHrBenchmark(const HrBenchmarkOptions &options);

struct BenchmarkRow {
  int size = 0;
  int parts = 0;
  double mean_f1 = 0.0;
};

// Linker settings used by the benchmark: the defaults, except that a
// single training mention is enough for a concept to be used.
LinkerConfig BenchmarkLinkerConfig(uint64_t seed);

// For each size m, splits the training pool of each concept into
// floor(pool / m) disjoint parts of m mentions, trains a fresh copy of the
// concept database on each part, scores the test set and averages F1 over
// the parts. Throws if m is not in [1, pool].
std::vector<BenchmarkRow> RunDisambiguationBenchmark(const HrBenchmarkData &data,
                                                     std::span<const int> sizes,
                                                     const LinkerConfig &config);

}  // namespace conceptlink

#endif  // CONCEPTLINK_HR_BENCHMARK_H_
