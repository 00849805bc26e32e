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


#include "conceptlink/spell.h"

#include <gtest/gtest.h>

#include <set>

#include "conceptlink/error.h"
#include "test_support.h"

namespace conceptlink {
namespace {

Vocabulary ClinicalVocab() {
  Vocabulary vocab;
  vocab.Add("patient", 5000);
  vocab.Add("patients", 800);
  vocab.Add("kidney", 700);
  vocab.Add("failure", 600);
  vocab.Add("heart", 900);
  vocab.Add("rate", 1200);
  vocab.Add("the", 100000);
  vocab.Add("hear", 50);
  return vocab;
}

const std::vector<std::string> kTargets = {"patient", "kidney", "failure",
                                           "heart", "rate", "hear"};

TEST(EditDistanceTest, MatchesOracle) {
  EXPECT_EQ(BoundedEditDistance("pattient", "patient", 2), 1);
  EXPECT_EQ(BoundedEditDistance("ca", "abc", 5), 2);  // unrestricted variant
  EXPECT_EQ(BoundedEditDistance("abc", "xyz", 1), 2);  // capped at limit + 1
  testing::Random random(9);
  const std::string alphabet = "abcd";
  for (int trial = 0; trial < 20000; ++trial) {
    std::string a, b;
    for (int i = random.Below(7); i > 0; --i) a += alphabet[random.Below(4)];
    for (int i = random.Below(7); i > 0; --i) b += alphabet[random.Below(4)];
    int exact = testing::DamerauLevenshtein(a, b);
    int limit = random.Below(4);
    ASSERT_EQ(BoundedEditDistance(a, b, limit), std::min(exact, limit + 1))
        << a << " " << b << " " << limit;
  }
}

TEST(SpellConfigTest, Budget) {
  SpellConfig config;
  EXPECT_EQ(config.Budget(5), 1);
  EXPECT_EQ(config.Budget(6), 2);
  EXPECT_EQ(config.Budget(12), 2);
  SpellConfig bad;
  bad.max_edits_short = 3;
  EXPECT_THROW(bad.Validate(), Error);
  SpellConfig zero;
  zero.length_threshold = 0;
  EXPECT_THROW(zero.Validate(), Error);
}

TEST(SpellCheckerTest, Examples) {
  Vocabulary vocab = ClinicalVocab();
  SpellChecker checker(vocab, kTargets);
  EXPECT_EQ(checker.Correct("pattient", false), "patient");
  EXPECT_EQ(checker.Correct("HR", true), "HR");
  EXPECT_EQ(checker.Correct("xqzw", false), "xqzw");
  EXPECT_EQ(checker.Correct("8mgs", false), "8mgs");
  // In-vocabulary words are never altered, even when close to a target.
  EXPECT_EQ(checker.Correct("patients", false), "patients");
  EXPECT_EQ(checker.Correct("the", false), "the");
}

TEST(SpellCheckerTest, PrefersHigherCountThenDistance) {
  Vocabulary vocab = ClinicalVocab();
  SpellChecker checker(vocab, kTargets);
  // "heat" is one edit from both "heart" (900) and "hear" (50).
  EXPECT_EQ(checker.Correct("heat", false), "heart");
}

TEST(SpellCheckerTest, BudgetRespected) {
  Vocabulary vocab = ClinicalVocab();
  SpellChecker checker(vocab, kTargets);
  // Short word: only one edit allowed.
  EXPECT_EQ(checker.Correct("rtae", false), "rate");  // transposition
  EXPECT_EQ(checker.Correct("rxtx", false), "rxtx");  // two edits
  // Long word: two edits allowed, three are not.
  EXPECT_EQ(checker.Correct("kidnye", false), "kidney");
  EXPECT_EQ(checker.Correct("faliur", false), "failure");
  EXPECT_EQ(checker.Correct("fxxxure", false), "fxxxure");
}

// Random corruptions: every correction is a target word within budget, or
// the input itself; correcting twice changes nothing.
TEST(SpellCheckerTest, PropertiesAgainstOracle) {
  Vocabulary vocab = ClinicalVocab();
  SpellChecker checker(vocab, kTargets);
  std::set<std::string> targets(kTargets.begin(), kTargets.end());
  testing::Random random(21);
  for (int trial = 0; trial < 3000; ++trial) {
    std::string word = kTargets[random.Below(static_cast<int>(kTargets.size()))];
    for (int e = random.Below(4); e > 0 && !word.empty(); --e) {
      size_t pos = random.Below(static_cast<int>(word.size()));
      char c = static_cast<char>('a' + random.Below(26));
      switch (random.Below(3)) {
        case 0: word.erase(pos, 1); break;
        case 1: word.insert(word.begin() + pos, c); break;
        default: word[pos] = c;
      }
    }
    if (word.empty()) continue;
    std::string corrected = checker.Correct(word, false);
    if (corrected != word) {
      ASSERT_TRUE(targets.count(corrected)) << word << " -> " << corrected;
      ASSERT_LE(testing::DamerauLevenshtein(word, corrected),
                checker.config().Budget(word.size()));
      ASSERT_FALSE(vocab.Contains(word));
    }
    ASSERT_EQ(checker.Correct(corrected, false), corrected);
  }
}

TEST(SpellCheckerTest, CacheIsTransparent) {
  Vocabulary vocab = ClinicalVocab();
  SpellConfig no_cache;
  no_cache.cache_capacity = 0;
  SpellConfig tiny_cache;
  tiny_cache.cache_capacity = 3;
  SpellChecker plain(vocab, kTargets, no_cache);
  SpellChecker cached(vocab, kTargets, tiny_cache);
  SpellChecker big(vocab, kTargets);
  testing::Random random(4);
  const std::vector<std::string> inputs = {"pattient", "heat", "kidny", "xq",
                                           "faliure", "rte", "the", "hert"};
  for (int i = 0; i < 500; ++i) {
    const std::string &w = inputs[random.Below(static_cast<int>(inputs.size()))];
    std::string expected = plain.Correct(w, false);
    ASSERT_EQ(cached.Correct(w, false), expected);
    ASSERT_EQ(big.Correct(w, false), expected);
  }
}

}  // namespace
}  // namespace conceptlink
