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


#include "conceptlink/trainer.h"

#include "conceptlink/error.h"

namespace conceptlink {

Trainer::Trainer(ConceptDatabase &cdb, const Vocabulary &vocab,
                 const TextNormalizer &normalizer, LinkerConfig config,
                 EmitMode mode)
    : cdb_(cdb),
      vocab_(vocab),
      normalizer_(normalizer),
      config_(config),
      mode_(mode),
      sampler_(vocab, config.seed) {
  config_.Validate();
  if (vocab_.dim() == 0 || sampler_.empty()) {
    throw DomainError("training requires a vocabulary with word vectors");
  }
  cdb_.EnsureDim(vocab_.dim());
}

void Trainer::Update(ConceptId id, std::vector<float> &embedding,
                     const ContextEmbedding &context, int half_width, double lr) {
  UpdateEvent event;
  event.concept_id = id;
  event.count = cdb_.concept_record(id).train_count;
  event.learning_rate = lr;
  event.half_width = half_width;

  event.similarity = ApplyPositiveUpdate(embedding, context.vector, lr);
  if (observer_) observer_(event);

  std::vector<double> negative =
      sampler_.SampleContext(config_.negative_k_factor * half_width);
  event.negative = true;
  event.similarity = ApplyNegativeUpdate(embedding, negative, lr);
  if (observer_) observer_(event);
}

void Trainer::TrainDocument(std::string_view text) {
  ++report_.documents;
  std::vector<Token> tokens = normalizer_.Normalize(text);
  std::vector<Candidate> candidates = DetectCandidates(tokens, cdb_, mode_);
  for (const Candidate &candidate : candidates) {
    const NameKey &name = cdb_.name(candidate.name_id);
    if (!name.is_unique() || name.is_abbreviation) {
      ++report_.candidates_filtered;
      continue;
    }
    auto ctx_long = ComputeContext(tokens, candidate.first_token,
                                   candidate.last_token, vocab_, config_.s_long);
    auto ctx_short = ComputeContext(tokens, candidate.first_token,
                                    candidate.last_token, vocab_, config_.s_short);
    if (!ctx_long && !ctx_short) {
      ++report_.mentions_without_context;
      continue;
    }
    const ConceptId id = name.concepts[0];
    ConceptRecord &record = cdb_.mutable_concept(id);
    // The counter goes up before the learning rate is taken, so the first
    // mention has lr = 1 and simply copies its context.
    ++record.train_count;
    const double lr = 1.0 / static_cast<double>(record.train_count);
    if (ctx_long) Update(id, record.embedding_long, *ctx_long, config_.s_long, lr);
    if (ctx_short) {
      Update(id, record.embedding_short, *ctx_short, config_.s_short, lr);
    }
    ++report_.mentions_used;
  }
}

TrainingReport Trainer::Finish() {
  report_.concepts_trained = 0;
  report_.concepts_below_threshold = 0;
  for (ConceptId id = 0; id < cdb_.num_concepts(); ++id) {
    if (cdb_.concept_record(id).train_count >=
        static_cast<uint64_t>(config_.min_train_count)) {
      ++report_.concepts_trained;
    } else {
      ++report_.concepts_below_threshold;
    }
  }
  return report_;
}

}  // namespace conceptlink
