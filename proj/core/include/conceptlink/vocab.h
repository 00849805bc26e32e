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


#ifndef CONCEPTLINK_VOCAB_H_
#define CONCEPTLINK_VOCAB_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "conceptlink/strings.h"

namespace conceptlink {

// A word of the vocabulary with its corpus count and, optionally, a dense
// word vector. Vectors are stored contiguously inside the Vocabulary.
struct WordEntry {
  std::string word;
  uint64_t count = 0;
  bool has_vector = false;
};

// Word list used for spell checking and for context embeddings. Immutable
// after loading; safe for concurrent reads.
class Vocabulary {
 public:
  Vocabulary() = default;

  // Adds or replaces a word. An empty vector means "no vector". The first
  // vector fixes the dimension of the vocabulary.
  void Add(std::string_view word, uint64_t count,
           std::span<const float> vector = {});

  // Looks up a word. Returns -1 if unknown.
  int Find(std::string_view word) const;
  bool Contains(std::string_view word) const { return Find(word) >= 0; }

  const WordEntry &entry(int index) const { return entries_[index]; }
  uint64_t count(std::string_view word) const;

  // Returns the vector for a word, or an empty span when the word is unknown
  // or has no vector.
  std::span<const float> vector(std::string_view word) const;
  std::span<const float> vector(int index) const;

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int dim() const { return dim_; }
  uint64_t total_count() const { return total_count_; }
  int num_vectors() const { return num_vectors_; }

  // Relative frequency count(word) / total_count. Unknown words have
  // frequency 0. Throws a domain error when the vocabulary is empty.
  double Frequency(std::string_view word) const;

  // Probability of drawing `word` as a negative sample:
  //   P(w) = f(w)^(3/4) / sum_j f(w_j)^(3/4)
  // where the sum runs over words that have vectors. Words without a vector
  // have probability 0.
  double SamplingProbability(std::string_view word) const;

  // Reads `word<TAB>count[<TAB>v1 v2 ... vD]` lines. Duplicate words keep the
  // last occurrence.
  static Vocabulary Load(std::istream &in);
  static Vocabulary LoadFile(const std::string &path);
  void Save(std::ostream &out) const;

 private:
  double SamplingNormalizer() const;

  std::vector<WordEntry> entries_;
  std::unordered_map<std::string, int, StringHash, std::equal_to<>> index_;
  // Row i holds the vector of entries_[i] (zeros when absent).
  std::vector<float> vectors_;
  int dim_ = 0;
  int num_vectors_ = 0;
  uint64_t total_count_ = 0;
};

// Draws words with probability proportional to count^(3/4), restricted to
// words that have vectors. Holds RNG state, so use one sampler per thread.
class NegativeSampler {
 public:
  NegativeSampler(const Vocabulary &vocab, uint64_t seed);

  bool empty() const { return words_.empty(); }

  // Draws one vocabulary index.
  int SampleIndex();

  // Returns the mean of `k` word vectors drawn with replacement.
  std::vector<double> SampleContext(int k);

  // Cumulative distribution over sampled words; last element is 1.
  std::span<const double> cumulative() const { return cumulative_; }
  std::span<const int> words() const { return words_; }

 private:
  double NextUniform();

  const Vocabulary *vocab_;
  std::vector<int> words_;
  std::vector<double> cumulative_;
  std::mt19937_64 rng_;
};

}  // namespace conceptlink

#endif  // CONCEPTLINK_VOCAB_H_
