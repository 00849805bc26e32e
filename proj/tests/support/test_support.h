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


#ifndef CONCEPTLINK_TESTS_SUPPORT_TEST_SUPPORT_H_
#define CONCEPTLINK_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "conceptlink/cdb.h"
#include "conceptlink/detect.h"
#include "conceptlink/normalize.h"
#include "conceptlink/vocab.h"

namespace conceptlink::testing {

// Portable pseudo-random draws for fixtures.
class Random {
 public:
  explicit Random(uint64_t seed) : rng_(seed) {}

  double Uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  int Below(int n) { return static_cast<int>(Uniform() * n); }
  double Gaussian() {
    double u1 = std::max(Uniform(), 1e-300);
    double u2 = Uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }
  std::vector<double> GaussianVector(int dim) {
    std::vector<double> v(dim);
    for (double &x : v) x = Gaussian();
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

// Unrestricted Damerau-Levenshtein distance (adjacent transpositions, edits
// may overlap), computed with the full table. Independent of the library.
int DamerauLevenshtein(std::string_view a, std::string_view b);

// Every contiguous token span whose match keys form an indexed name, ordered
// by first token then length.
std::vector<Candidate> BruteForceCandidates(const std::vector<Token> &tokens,
                                            const ConceptDatabase &cdb);

// Removes the directory tree when destroyed.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::string File(std::string_view name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

void WriteText(const std::string &path, std::string_view content);
std::string ReadText(const std::string &path);

// Clinical mini-world around the sentence
//   "During the night HR was in the 40s-50s and the pattient was given
//    8mg/ HR of morphine"
// HR names heart rate, hour and hazard ratio. Words cluster by topic
// (cardiac, dosing, statistics, renal, ward) and each trained concept has
// 40 training documents drawn from its topic.
inline constexpr char kHeartRate[] = "C0018810";
inline constexpr char kHour[] = "C0439227";
inline constexpr char kHazardRatio[] = "C2985465";
inline constexpr char kPatient[] = "C0030705";
inline constexpr char kKidneyFailure[] = "C0035078";
inline constexpr char kFailure[] = "C0231174";

struct ClinicalFixture {
  ConceptDatabase cdb;
  Vocabulary vocab;
  std::string cdb_csv;
  std::vector<std::string> training;
  // Two evaluation documents.
  std::string night_text;
  std::string renal_text;
};

ClinicalFixture MakeClinicalFixture(uint64_t seed = 7);

// Vocabulary text in the load format for `vocab`.
std::string VocabText(const Vocabulary &vocab);

}  // namespace conceptlink::testing

#endif  // CONCEPTLINK_TESTS_SUPPORT_TEST_SUPPORT_H_
