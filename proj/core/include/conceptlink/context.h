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


#ifndef CONCEPTLINK_CONTEXT_H_
#define CONCEPTLINK_CONTEXT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "conceptlink/normalize.h"
#include "conceptlink/vocab.h"

namespace conceptlink {

struct LinkerConfig {
  // Context half-widths for the long and short embeddings.
  int s_long = 9;
  int s_short = 2;
  // Minimum context similarity for an annotation to be emitted.
  double similarity_threshold = 0.1;
  // Concepts seen fewer times than this during training are not used for
  // linking.
  int min_train_count = 3;
  // Negative contexts average K = negative_k_factor * s sampled words.
  int negative_k_factor = 2;
  // Emit unique names with confidence 1 when no similarity is available
  // (untrained concept or no usable context).
  bool allow_untrained_unique = true;
  uint64_t seed = 0;

  void Validate() const;
};

// Mean word vector of the context around a mention.
struct ContextEmbedding {
  std::vector<double> vector;
  int words_used = 0;
};

// Averages the vectors of up to `s` tokens left of `first_token` and up to
// `s` tokens right of `last_token`, looked up by norm. Tokens without a
// vector are skipped and the divisor is the number of vectors actually
// summed. Returns nullopt when no vector contributes.
std::optional<ContextEmbedding> ComputeContext(std::span<const Token> tokens,
                                               size_t first_token,
                                               size_t last_token,
                                               const Vocabulary &vocab, int s);

// Positive update towards a context:
//   sim = max(0, cos(concept, ctx))
//   concept += lr * (1 - sim) * ctx
// An empty `concept` is treated as the zero vector (cosine 0). Returns sim.
template <typename T>
double ApplyPositiveUpdate(std::vector<T> &concept_vec,
                           std::span<const double> context, double lr);

// Negative update away from a sampled context:
//   sim = max(0, cos(concept, negative))
//   concept -= lr * sim * negative
// Returns sim.
template <typename T>
double ApplyNegativeUpdate(std::vector<T> &concept_vec,
                           std::span<const double> negative, double lr);

// Cosine similarity between a stored embedding and a context; 0 when either
// is empty or all zeros.
template <typename T>
double EmbeddingCosine(std::span<const T> embedding,
                       std::span<const double> context);

}  // namespace conceptlink

#endif  // CONCEPTLINK_CONTEXT_H_
