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


#include "conceptlink/hr_benchmark.h"

#include <cmath>
#include <cstdio>
#include <random>

#include "conceptlink/error.h"
#include "conceptlink/eval.h"
#include "conceptlink/pipeline.h"
#include "conceptlink/trainer.h"

namespace conceptlink {

namespace {

// Portable draws; the standard distributions are not specified bit-exactly.
class Random {
 public:
  explicit Random(uint64_t seed) : rng_(seed) {}

  double Uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  int Below(int n) { return static_cast<int>(Uniform() * n); }
  double Gaussian() {
    double u1 = Uniform();
    double u2 = Uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<std::string> MakePool(const char *prefix, int n) {
  std::vector<std::string> words;
  char buf[32];
  for (int i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof(buf), "%s%02d", prefix, i);
    words.push_back(buf);
  }
  return words;
}

}  // namespace

HrBenchmarkData GenerateHrBenchmark(const HrBenchmarkOptions &options) {
  Random random(options.seed);
  HrBenchmarkData data;

  const std::vector<std::string> pools[2] = {
      MakePool("card", options.words_per_pool),
      MakePool("stat", options.words_per_pool)};
  const std::vector<std::string> shared = MakePool("gen", options.shared_words);

  std::vector<double> topics[2];
  for (auto &topic : topics) {
    topic.resize(options.dim);
    for (double &x : topic) x = random.Gaussian();
  }
  std::vector<float> v(options.dim);
  auto add_word = [&](const std::string &word, uint64_t count,
                      const std::vector<double> *topic) {
    for (int i = 0; i < options.dim; ++i) {
      double x = random.Gaussian();
      if (topic != nullptr) x += options.topic_weight * (*topic)[i];
      v[i] = static_cast<float>(x);
    }
    data.vocab.Add(word, count, v);
  };
  for (int p = 0; p < 2; ++p) {
    for (const auto &w : pools[p]) add_word(w, 50 + random.Below(450), &topics[p]);
  }
  for (const auto &w : shared) add_word(w, 500 + random.Below(4500), nullptr);
  for (const char *w : {"heart", "rate", "hazard", "ratio"}) data.vocab.Add(w, 100);

  data.cdb.AddConcept(kHeartRateCui, "Heart Rate", "Clinical Attribute");
  data.cdb.AddConcept(kHeartRateCui, "HR", "Clinical Attribute", true);
  data.cdb.AddConcept(kHazardRatioCui, "Hazard Ratio", "Quantitative Concept");
  data.cdb.AddConcept(kHazardRatioCui, "HR", "Quantitative Concept", true);

  auto context_word = [&](int concept_index) -> const std::string & {
    double u = random.Uniform();
    if (u < options.p_own) {
      const auto &pool = pools[concept_index];
      return pool[random.Below(static_cast<int>(pool.size()))];
    }
    if (u < options.p_own + options.p_other) {
      const auto &pool = pools[1 - concept_index];
      return pool[random.Below(static_cast<int>(pool.size()))];
    }
    return shared[random.Below(static_cast<int>(shared.size()))];
  };
  // Returns the text and the byte offset of the mention.
  auto document = [&](int concept_index, const std::string &mention,
                      size_t *mention_start) {
    std::string text;
    for (int i = 0; i < options.context_words; ++i) {
      text += context_word(concept_index);
      text += ' ';
    }
    *mention_start = text.size();
    text += mention;
    for (int i = 0; i < options.context_words; ++i) {
      text += ' ';
      text += context_word(concept_index);
    }
    text += '.';
    return text;
  };

  size_t start;
  for (int i = 0; i < options.train_per_concept; ++i) {
    data.train_heart_rate.push_back(document(0, "heart rate", &start));
    data.train_hazard_ratio.push_back(document(1, "hazard ratio", &start));
  }
  for (int i = 0; i < options.test_mentions; ++i) {
    int concept_index = i % 2;
    std::string text = document(concept_index, "HR", &start);
    AnnotatedDocument gold;
    gold.id = "test-" + std::to_string(i);
    Annotation a;
    a.start = start;
    a.end = start + 2;
    a.text = "HR";
    a.cui = concept_index == 0 ? kHeartRateCui : kHazardRatioCui;
    gold.annotations.push_back(a);
    data.gold.push_back(std::move(gold));
    data.test_texts.push_back(std::move(text));
  }
  return data;
}

LinkerConfig BenchmarkLinkerConfig(uint64_t seed) {
  LinkerConfig config;
  config.min_train_count = 1;
  config.seed = seed;
  return config;
}

std::vector<BenchmarkRow> RunDisambiguationBenchmark(const HrBenchmarkData &data,
                                                     std::span<const int> sizes,
                                                     const LinkerConfig &config) {
  const int pool = static_cast<int>(std::min(data.train_heart_rate.size(),
                                             data.train_hazard_ratio.size()));
  std::vector<BenchmarkRow> rows;
  for (int size : sizes) {
    if (size < 1 || size > pool) {
      throw InvalidArgument("training size " + std::to_string(size) +
                            " outside [1, " + std::to_string(pool) + "]");
    }
    BenchmarkRow row;
    row.size = size;
    row.parts = pool / size;
    double f1_sum = 0.0;
    for (int part = 0; part < row.parts; ++part) {
      ConceptDatabase cdb = data.cdb;
      TextNormalizer normalizer(cdb, data.vocab);
      Trainer trainer(cdb, data.vocab, normalizer, config);
      for (int i = part * size; i < (part + 1) * size; ++i) {
        trainer.TrainDocument(data.train_heart_rate[i]);
        trainer.TrainDocument(data.train_hazard_ratio[i]);
      }
      trainer.Finish();

      Annotator annotator(cdb, data.vocab, normalizer, config);
      std::vector<AnnotatedDocument> predicted;
      for (size_t t = 0; t < data.test_texts.size(); ++t) {
        AnnotatedDocument doc;
        doc.id = data.gold[t].id;
        doc.annotations = annotator.Annotate(data.test_texts[t]).annotations;
        predicted.push_back(std::move(doc));
      }
      f1_sum += Score(data.gold, predicted).f1;
    }
    row.mean_f1 = f1_sum / row.parts;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace conceptlink
