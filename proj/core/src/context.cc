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


#include "conceptlink/context.h"

#include <algorithm>
#include <cmath>

#include "conceptlink/error.h"

namespace conceptlink {

void LinkerConfig::Validate() const {
  if (s_short < 1 || s_long <= s_short) {
    throw InvalidArgument("context sizes must satisfy s_long > s_short >= 1");
  }
  if (!(similarity_threshold >= 0.0 && similarity_threshold <= 1.0)) {
    throw InvalidArgument("similarity threshold must be in [0, 1]");
  }
  if (min_train_count < 0) {
    throw InvalidArgument("min_train_count must be >= 0");
  }
  if (negative_k_factor < 1) {
    throw InvalidArgument("negative_k_factor must be >= 1");
  }
}

std::optional<ContextEmbedding> ComputeContext(std::span<const Token> tokens,
                                               size_t first_token,
                                               size_t last_token,
                                               const Vocabulary &vocab, int s) {
  if (s < 1) throw InvalidArgument("context half-width must be >= 1");
  ContextEmbedding ctx;
  ctx.vector.assign(vocab.dim(), 0.0);
  auto add = [&](size_t i) {
    auto v = vocab.vector(tokens[i].norm);
    if (v.empty()) return;
    for (size_t j = 0; j < v.size(); ++j) ctx.vector[j] += v[j];
    ++ctx.words_used;
  };
  const size_t width = static_cast<size_t>(s);
  size_t left = first_token >= width ? first_token - width : 0;
  for (size_t i = left; i < first_token; ++i) add(i);
  size_t right = std::min(tokens.size(), last_token + 1 + width);
  for (size_t i = last_token + 1; i < right; ++i) add(i);
  if (ctx.words_used == 0) return std::nullopt;
  for (double &x : ctx.vector) x /= ctx.words_used;
  return ctx;
}

template <typename T>
double EmbeddingCosine(std::span<const T> embedding,
                       std::span<const double> context) {
  if (embedding.empty() || embedding.size() != context.size()) return 0.0;
  double dot = 0.0, ne = 0.0, nc = 0.0;
  for (size_t i = 0; i < context.size(); ++i) {
    double e = static_cast<double>(embedding[i]);
    dot += e * context[i];
    ne += e * e;
    nc += context[i] * context[i];
  }
  if (ne == 0.0 || nc == 0.0) return 0.0;
  return dot / (std::sqrt(ne) * std::sqrt(nc));
}

template <typename T>
double ApplyPositiveUpdate(std::vector<T> &concept_vec,
                           std::span<const double> context, double lr) {
  if (concept_vec.empty()) concept_vec.assign(context.size(), T(0));
  if (concept_vec.size() != context.size()) {
    throw DomainError("context dimension does not match concept embedding");
  }
  double sim = std::max(
      0.0, EmbeddingCosine(std::span<const T>(concept_vec), context));
  double scale = lr * (1.0 - sim);
  for (size_t i = 0; i < context.size(); ++i) {
    concept_vec[i] = static_cast<T>(concept_vec[i] + scale * context[i]);
  }
  return sim;
}

template <typename T>
double ApplyNegativeUpdate(std::vector<T> &concept_vec,
                           std::span<const double> negative, double lr) {
  if (concept_vec.empty()) return 0.0;
  if (concept_vec.size() != negative.size()) {
    throw DomainError("negative context dimension does not match concept embedding");
  }
  double sim = std::max(
      0.0, EmbeddingCosine(std::span<const T>(concept_vec), negative));
  if (sim == 0.0) return sim;
  double scale = lr * sim;
  for (size_t i = 0; i < negative.size(); ++i) {
    concept_vec[i] = static_cast<T>(concept_vec[i] - scale * negative[i]);
  }
  return sim;
}

template double EmbeddingCosine<float>(std::span<const float>,
                                       std::span<const double>);
template double EmbeddingCosine<double>(std::span<const double>,
                                        std::span<const double>);
template double ApplyPositiveUpdate<float>(std::vector<float> &,
                                           std::span<const double>, double);
template double ApplyPositiveUpdate<double>(std::vector<double> &,
                                            std::span<const double>, double);
template double ApplyNegativeUpdate<float>(std::vector<float> &,
                                           std::span<const double>, double);
template double ApplyNegativeUpdate<double>(std::vector<double> &,
                                            std::span<const double>, double);

}  // namespace conceptlink
