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


#include "conceptlink/vocab.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "conceptlink/error.h"

namespace conceptlink {

namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool ParseCount(std::string_view s, uint64_t *count) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *count);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool ParseVector(std::string_view s, std::vector<float> *out) {
  out->clear();
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    if (i == s.size()) break;
    size_t j = s.find(' ', i);
    if (j == std::string_view::npos) j = s.size();
    float value;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + j, value);
    if (ec != std::errc() || ptr != s.data() + j || !std::isfinite(value)) {
      return false;
    }
    out->push_back(value);
    i = j;
  }
  return !out->empty();
}

}  // namespace

void Vocabulary::Add(std::string_view word, uint64_t count,
                     std::span<const float> vector) {
  if (word.empty()) throw InvalidArgument("vocabulary word is empty");
  for (char c : word) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      throw InvalidArgument("vocabulary word contains whitespace: '" +
                            std::string(word) + "'");
    }
  }
  if (count == 0) {
    throw InvalidArgument("vocabulary count must be >= 1 for '" +
                          std::string(word) + "'");
  }
  if (!vector.empty()) {
    if (dim_ == 0) {
      dim_ = static_cast<int>(vector.size());
      // Earlier rows had no vectors; give them zero storage now.
      vectors_.assign(entries_.size() * dim_, 0.0f);
    } else if (static_cast<int>(vector.size()) != dim_) {
      throw ParseError("vector dimension mismatch: expected " +
                       std::to_string(dim_) + ", got " +
                       std::to_string(vector.size()));
    }
  }

  int index;
  auto it = index_.find(word);
  if (it != index_.end()) {
    index = it->second;
    WordEntry &e = entries_[index];
    total_count_ -= e.count;
    if (e.has_vector) --num_vectors_;
  } else {
    index = static_cast<int>(entries_.size());
    entries_.push_back(WordEntry{std::string(word), 0, false});
    index_.emplace(std::string(word), index);
    if (dim_ > 0) vectors_.resize(vectors_.size() + dim_, 0.0f);
  }

  WordEntry &e = entries_[index];
  e.count = count;
  e.has_vector = !vector.empty();
  total_count_ += count;
  if (e.has_vector) {
    ++num_vectors_;
    std::copy(vector.begin(), vector.end(), vectors_.begin() + index * dim_);
  } else if (dim_ > 0) {
    std::fill_n(vectors_.begin() + index * dim_, dim_, 0.0f);
  }
}

int Vocabulary::Find(std::string_view word) const {
  auto it = index_.find(word);
  return it == index_.end() ? -1 : it->second;
}

uint64_t Vocabulary::count(std::string_view word) const {
  int i = Find(word);
  return i < 0 ? 0 : entries_[i].count;
}

std::span<const float> Vocabulary::vector(int index) const {
  if (index < 0 || !entries_[index].has_vector) return {};
  return std::span<const float>(vectors_).subspan(
      static_cast<size_t>(index) * dim_, dim_);
}

std::span<const float> Vocabulary::vector(std::string_view word) const {
  return vector(Find(word));
}

double Vocabulary::Frequency(std::string_view word) const {
  if (total_count_ == 0) {
    throw DomainError("word frequency undefined: vocabulary is empty");
  }
  return static_cast<double>(count(word)) / static_cast<double>(total_count_);
}

double Vocabulary::SamplingNormalizer() const {
  // Counts are used instead of frequencies: the 1/total factor cancels
  // between numerator and denominator.
  double sum = 0.0;
  for (const WordEntry &e : entries_) {
    if (e.has_vector) sum += std::pow(static_cast<double>(e.count), 0.75);
  }
  return sum;
}

double Vocabulary::SamplingProbability(std::string_view word) const {
  if (num_vectors_ == 0) {
    throw DomainError("sampling probability undefined: no word has a vector");
  }
  int i = Find(word);
  if (i < 0 || !entries_[i].has_vector) return 0.0;
  return std::pow(static_cast<double>(entries_[i].count), 0.75) /
         SamplingNormalizer();
}

Vocabulary Vocabulary::Load(std::istream &in) {
  Vocabulary vocab;
  std::string line;
  std::vector<float> values;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = SplitTabs(line);
    auto where = [&] { return "vocabulary line " + std::to_string(line_number); };
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError(where() + ": expected 2 or 3 tab-separated fields, got " +
                       std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw ParseError(where() + ": empty word");
    uint64_t count;
    if (!ParseCount(fields[1], &count) || count == 0) {
      throw ParseError(where() + ": invalid count '" + std::string(fields[1]) +
                       "'");
    }
    values.clear();
    if (fields.size() == 3 && !ParseVector(fields[2], &values)) {
      throw ParseError(where() + ": invalid vector");
    }
    try {
      vocab.Add(fields[0], count, values);
    } catch (const Error &e) {
      throw ParseError(where() + ": " + e.what());
    }
  }
  if (in.bad()) throw IoError("error reading vocabulary stream");
  return vocab;
}

Vocabulary Vocabulary::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open vocabulary file: " + path);
  return Load(in);
}

void Vocabulary::Save(std::ostream &out) const {
  // max_digits10 makes float output round-trip exactly.
  std::ostringstream buffer;
  buffer << std::setprecision(9);
  for (int i = 0; i < size(); ++i) {
    const WordEntry &e = entries_[i];
    buffer << e.word << '\t' << e.count;
    if (e.has_vector) {
      buffer << '\t';
      auto v = vector(i);
      for (size_t j = 0; j < v.size(); ++j) {
        if (j > 0) buffer << ' ';
        buffer << v[j];
      }
    }
    buffer << '\n';
  }
  out << buffer.str();
}

NegativeSampler::NegativeSampler(const Vocabulary &vocab, uint64_t seed)
    : vocab_(&vocab), rng_(seed) {
  double sum = 0.0;
  for (int i = 0; i < vocab.size(); ++i) {
    const WordEntry &e = vocab.entry(i);
    if (!e.has_vector) continue;
    words_.push_back(i);
    sum += std::pow(static_cast<double>(e.count), 0.75);
    cumulative_.push_back(sum);
  }
  for (double &c : cumulative_) c /= sum;
  if (!cumulative_.empty()) cumulative_.back() = 1.0;
}

double NegativeSampler::NextUniform() {
  // 53 random bits mapped to [0, 1). Avoids std::uniform_real_distribution,
  // whose output is not specified across standard libraries.
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

int NegativeSampler::SampleIndex() {
  if (words_.empty()) throw DomainError("negative sampler is empty");
  double u = NextUniform();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  size_t pos = std::min<size_t>(it - cumulative_.begin(), words_.size() - 1);
  return words_[pos];
}

std::vector<double> NegativeSampler::SampleContext(int k) {
  if (k < 1) throw InvalidArgument("negative context size must be >= 1");
  if (words_.empty()) throw DomainError("negative sampler is empty");
  std::vector<double> mean(vocab_->dim(), 0.0);
  for (int i = 0; i < k; ++i) {
    auto v = vocab_->vector(SampleIndex());
    for (size_t j = 0; j < v.size(); ++j) mean[j] += v[j];
  }
  for (double &x : mean) x /= k;
  return mean;
}

}  // namespace conceptlink
