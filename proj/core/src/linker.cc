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


#include <algorithm>
#include <optional>

#include "conceptlink/error.h"
#include "conceptlink/pipeline.h"

namespace conceptlink {

TextNormalizer::TextNormalizer(const ConceptDatabase &cdb,
                               const Vocabulary &vocab, SpellConfig spell_config,
                               bool enable_spelling)
    : cdb_(cdb) {
  if (enable_spelling) {
    spell_ = std::make_unique<SpellChecker>(vocab, cdb.NameWords(), spell_config);
  }
}

std::vector<Token> TextNormalizer::Normalize(std::string_view text) const {
  std::vector<Token> tokens = Tokenize(text);
  if (spell_) spell_->CorrectAll(tokens);
  Lemmatize(tokens, cdb_.lemmatizer());
  return tokens;
}

bool ContextSimilarity(const ConceptRecord &record,
                       const std::vector<double> *context_long,
                       const std::vector<double> *context_short,
                       const LinkerConfig &config, double *similarity) {
  if (record.train_count < static_cast<uint64_t>(config.min_train_count) ||
      !record.has_embedding()) {
    return false;
  }
  double sum = 0.0;
  int parts = 0;
  if (context_long && !record.embedding_long.empty()) {
    sum += EmbeddingCosine(std::span<const float>(record.embedding_long),
                           *context_long);
    ++parts;
  }
  if (context_short && !record.embedding_short.empty()) {
    sum += EmbeddingCosine(std::span<const float>(record.embedding_short),
                           *context_short);
    ++parts;
  }
  if (parts == 0) return false;
  *similarity = sum / parts;
  return true;
}

std::vector<Annotation> LinkCandidates(std::string_view text,
                                       std::span<const Token> tokens,
                                       std::span<const Candidate> candidates,
                                       const ConceptDatabase &cdb,
                                       const Vocabulary &vocab,
                                       const LinkerConfig &config) {
  std::vector<Annotation> annotations;
  for (const Candidate &candidate : candidates) {
    const NameKey &name = cdb.name(candidate.name_id);
    std::optional<ContextEmbedding> ctx_long, ctx_short;
    if (vocab.dim() > 0) {
      ctx_long = ComputeContext(tokens, candidate.first_token,
                                candidate.last_token, vocab, config.s_long);
      ctx_short = ComputeContext(tokens, candidate.first_token,
                                 candidate.last_token, vocab, config.s_short);
    }
    const std::vector<double> *long_vec = ctx_long ? &ctx_long->vector : nullptr;
    const std::vector<double> *short_vec =
        ctx_short ? &ctx_short->vector : nullptr;

    // Concepts are ordered by cui, so ties go to the smaller cui.
    int best = -1;
    double best_similarity = 0.0;
    for (size_t i = 0; i < name.concepts.size(); ++i) {
      double similarity;
      if (!ContextSimilarity(cdb.concept_record(name.concepts[i]), long_vec,
                             short_vec, config, &similarity)) {
        continue;
      }
      if (best < 0 || similarity > best_similarity) {
        best = static_cast<int>(i);
        best_similarity = similarity;
      }
    }

    Annotation annotation;
    if (best >= 0) {
      if (best_similarity < config.similarity_threshold) continue;
      annotation.cui = cdb.concept_record(name.concepts[best]).cui;
      annotation.confidence = std::min(1.0, best_similarity);
    } else if (name.is_unique() && config.allow_untrained_unique) {
      annotation.cui = cdb.concept_record(name.concepts[0]).cui;
      annotation.confidence = 1.0;
    } else {
      continue;
    }
    annotation.start = candidate.start;
    annotation.end = candidate.end;
    annotation.first_token = candidate.first_token;
    annotation.last_token = candidate.last_token;
    annotation.text = std::string(text.substr(candidate.start,
                                              candidate.end - candidate.start));
    annotations.push_back(std::move(annotation));
  }
  return annotations;
}

Annotator::Annotator(const ConceptDatabase &cdb, const Vocabulary &vocab,
                     const TextNormalizer &normalizer, LinkerConfig config,
                     EmitMode mode)
    : cdb_(cdb), vocab_(vocab), normalizer_(normalizer), config_(config),
      mode_(mode) {
  config_.Validate();
  if (cdb_.dim() != 0 && vocab_.dim() != cdb_.dim()) {
    throw DomainError("concept database has dimension " +
                      std::to_string(cdb_.dim()) +
                      " but the vocabulary has dimension " +
                      std::to_string(vocab_.dim()));
  }
}

DocumentResult Annotator::Annotate(std::string_view text, CoocMatrix *cooc) const {
  DocumentResult result;
  std::vector<Token> tokens = normalizer_.Normalize(text);
  std::vector<Candidate> candidates = DetectCandidates(tokens, cdb_, mode_);
  result.num_tokens = tokens.size();
  result.num_candidates = candidates.size();
  result.annotations =
      LinkCandidates(text, tokens, candidates, cdb_, vocab_, config_);
  std::stable_sort(result.annotations.begin(), result.annotations.end(),
                   [](const Annotation &a, const Annotation &b) {
                     return a.start < b.start;
                   });
  result.num_emitted = result.annotations.size();
  if (cooc != nullptr) {
    std::vector<std::string> cuis;
    for (const Annotation &a : result.annotations) cuis.push_back(a.cui);
    cooc->AddBlock(cuis);
  }
  return result;
}

}  // namespace conceptlink
