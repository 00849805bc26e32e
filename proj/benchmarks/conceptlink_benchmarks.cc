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


// Microbenchmarks for detection, spelling correction and annotation.

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "conceptlink/cdb.h"
#include "conceptlink/detect.h"
#include "conceptlink/normalize.h"
#include "conceptlink/pipeline.h"
#include "conceptlink/spell.h"
#include "conceptlink/vocab.h"

namespace conceptlink {
namespace {

constexpr int kDim = 50;

struct World {
  std::vector<std::string> lexicon;
  std::vector<std::string> names;
  Vocabulary vocab;
  ConceptDatabase cdb;
  std::string document;
};

// Random lexicon, a name table of `num_names` entries and a ~200 token
// document in which one token in ten starts a name.
const World &GetWorld(int num_names) {
  static std::map<int, std::unique_ptr<World>> cache;
  auto &slot = cache[num_names];
  if (slot) return *slot;
  slot = std::make_unique<World>();
  World &w = *slot;
  std::mt19937_64 rng(17);
  auto below = [&](size_t n) { return static_cast<size_t>(rng() % n); };
  std::normal_distribution<float> gauss;
  std::vector<float> v(kDim);
  while (w.lexicon.size() < 20000) {
    std::string word;
    for (size_t n = 4 + below(6); n > 0; --n) word += static_cast<char>('a' + below(26));
    if (w.vocab.Contains(word)) continue;
    for (float &x : v) x = gauss(rng);
    w.vocab.Add(word, 1 + below(10000), v);
    w.lexicon.push_back(word);
  }
  for (int i = 0; i < num_names; ++i) {
    std::string name;
    for (size_t k = 1 + below(4); k > 0; --k) {
      if (!name.empty()) name += ' ';
      name += w.lexicon[below(w.lexicon.size())];
    }
    w.cdb.AddConcept("C" + std::to_string(i), name);
    w.names.push_back(name);
  }
  for (int tokens = 0; tokens < 200; ++tokens) {
    w.document += below(10) == 0 ? w.names[below(w.names.size())]
                                 : w.lexicon[below(w.lexicon.size())];
    w.document += ' ';
  }
  return w;
}

void BM_Detect(benchmark::State &state) {
  const World &w = GetWorld(static_cast<int>(state.range(0)));
  std::vector<Token> tokens = Tokenize(w.document);
  Lemmatize(tokens, w.cdb.lemmatizer());
  for (auto _ : state) {
    benchmark::DoNotOptimize(DetectCandidates(tokens, w.cdb, EmitMode::kLongest));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(tokens.size()));
}
BENCHMARK(BM_Detect)->Arg(1000)->Arg(100000);

void BM_SpellCorrect(benchmark::State &state) {
  const World &w = GetWorld(100000);
  std::vector<std::string> targets(w.lexicon.begin(), w.lexicon.end());
  SpellConfig config;
  config.cache_capacity = 0;  // measure the index, not the memo
  SpellChecker checker(w.vocab, targets, config);
  std::vector<std::string> misspelled;
  for (size_t i = 0; i < 256; ++i) {
    std::string word = w.lexicon[i * 61 % w.lexicon.size()];
    word[i % word.size()] = 'q';
    misspelled.push_back(word);
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(checker.Correct(misspelled[i++ % misspelled.size()], false));
  }
}
BENCHMARK(BM_SpellCorrect);

void BM_Annotate(benchmark::State &state) {
  const World &w = GetWorld(100000);
  TextNormalizer normalizer(w.cdb, w.vocab);
  Annotator annotator(w.cdb, w.vocab, normalizer);
  for (auto _ : state) benchmark::DoNotOptimize(annotator.Annotate(w.document));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(w.document.size()));
}
BENCHMARK(BM_Annotate);

}  // namespace
}  // namespace conceptlink

BENCHMARK_MAIN();
