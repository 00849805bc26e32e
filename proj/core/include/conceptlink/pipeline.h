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


#ifndef CONCEPTLINK_PIPELINE_H_
#define CONCEPTLINK_PIPELINE_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "conceptlink/cdb.h"
#include "conceptlink/context.h"
#include "conceptlink/cooc.h"
#include "conceptlink/detect.h"
#include "conceptlink/normalize.h"
#include "conceptlink/spell.h"
#include "conceptlink/vocab.h"

namespace conceptlink {

// tokenize -> spell-correct -> lemmatize. Spelling targets are the name
// words of the concept database; lemmas come from the database's lemmatizer
// so that text and names normalize the same way.
class TextNormalizer {
 public:
  TextNormalizer(const ConceptDatabase &cdb, const Vocabulary &vocab,
                 SpellConfig spell_config = {}, bool enable_spelling = true);

  std::vector<Token> Normalize(std::string_view text) const;

  // nullptr when spelling is disabled.
  const SpellChecker *spell_checker() const { return spell_.get(); }

 private:
  std::unique_ptr<SpellChecker> spell_;
  const ConceptDatabase &cdb_;
};

// A linked mention.
struct Annotation {
  size_t start = 0;
  size_t end = 0;
  size_t first_token = 0;
  size_t last_token = 0;
  std::string cui;
  double confidence = 0.0;
  std::string text;
};

// Similarity of a candidate concept to a mention's contexts: the mean of the
// long and short cosine similarities that can be computed. Returns false
// when the concept is not trained or no context is available.
bool ContextSimilarity(const ConceptRecord &record,
                       const std::vector<double> *context_long,
                       const std::vector<double> *context_short,
                       const LinkerConfig &config, double *similarity);

// Disambiguates and filters candidates. Among the trained concepts of a
// candidate the one with the highest context similarity wins and is emitted
// when the similarity reaches the threshold. A unique name without any
// usable similarity is emitted with confidence 1 if allowed by the config.
std::vector<Annotation> LinkCandidates(std::string_view text,
                                       std::span<const Token> tokens,
                                       std::span<const Candidate> candidates,
                                       const ConceptDatabase &cdb,
                                       const Vocabulary &vocab,
                                       const LinkerConfig &config);

struct DocumentResult {
  std::vector<Annotation> annotations;
  size_t num_tokens = 0;
  size_t num_candidates = 0;
  size_t num_emitted = 0;
};

// Full annotation pipeline over an immutable model. Annotate() is const and
// may be called from several threads at once.
class Annotator {
 public:
  Annotator(const ConceptDatabase &cdb, const Vocabulary &vocab,
            const TextNormalizer &normalizer, LinkerConfig config = {},
            EmitMode mode = EmitMode::kLongest);

  // Annotations come back sorted by start offset. When `cooc` is given the
  // document is added to it as one text block.
  DocumentResult Annotate(std::string_view text,
                          CoocMatrix *cooc = nullptr) const;

  const LinkerConfig &config() const { return config_; }

 private:
  const ConceptDatabase &cdb_;
  const Vocabulary &vocab_;
  const TextNormalizer &normalizer_;
  LinkerConfig config_;
  EmitMode mode_;
};

}  // namespace conceptlink

#endif  // CONCEPTLINK_PIPELINE_H_
