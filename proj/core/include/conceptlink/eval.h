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


#ifndef CONCEPTLINK_EVAL_H_
#define CONCEPTLINK_EVAL_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "conceptlink/jsonl.h"

namespace conceptlink {

struct LabelCounts {
  uint64_t true_positives = 0;
  uint64_t false_positives = 0;
  uint64_t false_negatives = 0;
};

struct EvalReport {
  uint64_t true_positives = 0;
  uint64_t false_positives = 0;
  uint64_t false_negatives = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // Number of gold annotations.
  uint64_t support = 0;
  std::map<std::string, LabelCounts> per_cui;

  std::string ToJson() const;
  std::string ToTable() const;
};

// precision, recall and F1 from counts; each is 0 when its denominator is.
void ComputeRates(EvalReport *report);

// Exact-span scoring: a prediction is a true positive iff its [start, end)
// and cui equal a gold annotation of the same document that has not been
// matched yet (predictions are matched in start order). Remaining
// predictions are false positives, remaining gold annotations false
// negatives. Predictions for a document id absent from `gold` are an error.
EvalReport Score(std::span<const AnnotatedDocument> gold,
                 std::span<const AnnotatedDocument> predicted);

}  // namespace conceptlink

#endif  // CONCEPTLINK_EVAL_H_
