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


#ifndef CONCEPTLINK_TRAINER_H_
#define CONCEPTLINK_TRAINER_H_

#include <cstdint>
#include <functional>
#include <string_view>

#include "conceptlink/cdb.h"
#include "conceptlink/context.h"
#include "conceptlink/detect.h"
#include "conceptlink/pipeline.h"
#include "conceptlink/vocab.h"

namespace conceptlink {

struct TrainingReport {
  uint64_t documents = 0;
  uint64_t documents_failed = 0;
  // Mentions of unique, non-abbreviation names that updated a concept.
  uint64_t mentions_used = 0;
  // Eligible mentions without any vectored context word.
  uint64_t mentions_without_context = 0;
  // Candidates skipped because the name is ambiguous or an abbreviation.
  uint64_t candidates_filtered = 0;
  // Concepts with train_count >= min_train_count.
  uint64_t concepts_trained = 0;
  // Concepts with train_count < min_train_count (including never seen).
  uint64_t concepts_below_threshold = 0;
};

// One embedding update, reported to an optional observer.
struct UpdateEvent {
  ConceptId concept_id = 0;
  // train_count after the increment for this mention.
  uint64_t count = 0;
  double learning_rate = 0.0;
  double similarity = 0.0;
  bool negative = false;
  // Context half-width (s_long or s_short).
  int half_width = 0;
};

// Unsupervised training. Mentions of names that are unique and not
// abbreviations are treated as correctly linked; for each one the long and
// short concept embeddings are pulled towards the mention's context and
// pushed away from a sampled negative context, with learning rate
// 1 / train_count. Documents are processed one at a time, so memory does
// not grow with the corpus.
//
// With a fixed seed and document order training is bit-reproducible.
class Trainer {
 public:
  Trainer(ConceptDatabase &cdb, const Vocabulary &vocab,
          const TextNormalizer &normalizer, LinkerConfig config = {},
          EmitMode mode = EmitMode::kLongest);

  void TrainDocument(std::string_view text);
  // Counts a document that could not be read.
  void RecordFailedDocument() { ++report_.documents_failed; }

  // Fills in the per-concept totals and returns the report.
  TrainingReport Finish();
  const TrainingReport &report() const { return report_; }

  void set_observer(std::function<void(const UpdateEvent &)> observer) {
    observer_ = std::move(observer);
  }

 private:
  void Update(ConceptId id, std::vector<float> &embedding,
              const ContextEmbedding &context, int half_width, double lr);

  ConceptDatabase &cdb_;
  const Vocabulary &vocab_;
  const TextNormalizer &normalizer_;
  LinkerConfig config_;
  EmitMode mode_;
  NegativeSampler sampler_;
  TrainingReport report_;
  std::function<void(const UpdateEvent &)> observer_;
};

}  // namespace conceptlink

#endif  // CONCEPTLINK_TRAINER_H_
