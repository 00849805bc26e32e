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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "conceptlink/error.h"
#include "test_support.h"

namespace conceptlink {
namespace {

Vocabulary Parse(const std::string &text) {
  std::istringstream in(text);
  return Vocabulary::Load(in);
}

TEST(VocabularyTest, LoadsCountsAndVectors) {
  Vocabulary vocab = Parse("house\t34444\ndog\t14\t0.1 0.2 0.3\n");
  EXPECT_EQ(vocab.size(), 2);
  EXPECT_EQ(vocab.dim(), 3);
  EXPECT_EQ(vocab.total_count(), 34458u);
  EXPECT_TRUE(vocab.vector("house").empty());
  ASSERT_EQ(vocab.vector("dog").size(), 3u);
  EXPECT_FLOAT_EQ(vocab.vector("dog")[2], 0.3f);
}

TEST(VocabularyTest, EmptyStream) {
  Vocabulary vocab = Parse("");
  EXPECT_EQ(vocab.size(), 0);
  EXPECT_EQ(vocab.total_count(), 0u);
}

TEST(VocabularyTest, DimensionMismatchNamesBothDimensions) {
  try {
    Parse("a\t1\t1 2 3\nb\t1\t1 2 3 4\n");
    FAIL() << "expected an error";
  } catch (const Error &e) {
    std::string message = e.what();
    EXPECT_NE(message.find('3'), std::string::npos);
    EXPECT_NE(message.find('4'), std::string::npos);
  }
}

TEST(VocabularyTest, MalformedLineNamesLine) {
  try {
    Parse("a\t1\nb\tmany\n");
    FAIL() << "expected an error";
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(Parse("a\n"), Error);
  EXPECT_THROW(Parse("a\t1\t0.5 x\n"), Error);
}

TEST(VocabularyTest, DuplicateKeepsLast) {
  Vocabulary vocab = Parse("a\t5\na\t7\n");
  EXPECT_EQ(vocab.size(), 1);
  EXPECT_EQ(vocab.count("a"), 7u);
  EXPECT_EQ(vocab.total_count(), 7u);
}

TEST(VocabularyTest, Frequency) {
  Vocabulary even = Parse("a\t1\nb\t1\n");
  EXPECT_DOUBLE_EQ(even.Frequency("a"), 0.5);
  Vocabulary skewed = Parse("a\t3\nb\t1\n");
  EXPECT_DOUBLE_EQ(skewed.Frequency("b"), 0.25);
  EXPECT_DOUBLE_EQ(skewed.Frequency("zzz"), 0.0);
  EXPECT_THROW(Vocabulary().Frequency("a"), Error);
}

TEST(VocabularyTest, SamplingProbability) {
  Vocabulary uniform = Parse("a\t4\t1\nb\t4\t1\nc\t4\t1\nd\t4\t1\n");
  EXPECT_NEAR(uniform.SamplingProbability("c"), 0.25, 1e-12);

  // 16^(3/4) = 8, so the odds are 8 : 1.
  Vocabulary skewed = Parse("a\t16\t1 0\nb\t1\t0 1\nc\t1000\n");
  EXPECT_NEAR(skewed.SamplingProbability("a"), 8.0 / 9.0, 1e-12);
  EXPECT_NEAR(skewed.SamplingProbability("b"), 1.0 / 9.0, 1e-12);
  EXPECT_EQ(skewed.SamplingProbability("c"), 0.0);

  EXPECT_THROW(Parse("a\t3\n").SamplingProbability("a"), Error);
}

TEST(VocabularyTest, SamplingProbabilitySumsToOneAndIsMonotone) {
  testing::Random random(3);
  for (int trial = 0; trial < 50; ++trial) {
    Vocabulary vocab;
    std::vector<float> v = {1.0f, 2.0f};
    int n = 1 + random.Below(30);
    for (int i = 0; i < n; ++i) {
      vocab.Add("w" + std::to_string(i), 1 + random.Below(100000), v);
    }
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += vocab.SamplingProbability(vocab.entry(i).word);
    EXPECT_NEAR(sum, 1.0, 1e-9);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (vocab.entry(i).count > vocab.entry(j).count) {
          EXPECT_GT(vocab.SamplingProbability(vocab.entry(i).word),
                    vocab.SamplingProbability(vocab.entry(j).word));
        }
      }
    }
  }
}

TEST(VocabularyTest, SaveLoadRoundTrip) {
  testing::Random random(11);
  Vocabulary vocab;
  std::vector<float> v(7);
  for (int i = 0; i < 100; ++i) {
    for (float &x : v) x = static_cast<float>(random.Gaussian() * 10);
    if (i % 3 == 0) {
      vocab.Add("plain" + std::to_string(i), 1 + random.Below(1000000));
    } else {
      vocab.Add("word" + std::to_string(i), 1 + random.Below(1000000), v);
    }
  }
  Vocabulary loaded = Parse(testing::VocabText(vocab));
  ASSERT_EQ(loaded.size(), vocab.size());
  EXPECT_EQ(loaded.dim(), vocab.dim());
  for (int i = 0; i < vocab.size(); ++i) {
    const std::string &word = vocab.entry(i).word;
    EXPECT_EQ(loaded.count(word), vocab.count(word));
    auto a = vocab.vector(word);
    auto b = loaded.vector(word);
    ASSERT_EQ(a.size(), b.size());
    for (size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-6 * std::max(1.0f, std::fabs(a[k])));
  }
}

TEST(NegativeSamplerTest, CumulativeEndsAtOne) {
  Vocabulary vocab = Parse("a\t3\t1\nb\t9\nc\t5\t2\n");
  NegativeSampler sampler(vocab, 0);
  ASSERT_EQ(sampler.words().size(), 2u);
  auto cumulative = sampler.cumulative();
  EXPECT_TRUE(std::is_sorted(cumulative.begin(), cumulative.end()));
  EXPECT_NEAR(cumulative.back(), 1.0, 1e-9);
}

TEST(NegativeSamplerTest, SingleWordSupport) {
  Vocabulary vocab = Parse("w\t4\t0.5 -1.5\nx\t100\n");
  NegativeSampler sampler(vocab, 5);
  std::vector<double> mean = sampler.SampleContext(5);
  ASSERT_EQ(mean.size(), 2u);
  EXPECT_DOUBLE_EQ(mean[0], 0.5);
  EXPECT_DOUBLE_EQ(mean[1], -1.5);
}

TEST(NegativeSamplerTest, DeterministicForSeed) {
  Vocabulary vocab = Parse("a\t1\t1 0\nb\t2\t0 1\nc\t3\t1 1\n");
  NegativeSampler first(vocab, 42), second(vocab, 42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(first.SampleContext(4), second.SampleContext(4));
}

TEST(NegativeSamplerTest, MeanConverges) {
  Vocabulary vocab = Parse("a\t5\t1 0\nb\t5\t0 1\n");
  NegativeSampler sampler(vocab, 1);
  std::vector<double> mean = sampler.SampleContext(10000);
  EXPECT_NEAR(mean[0], 0.5, 0.05);
  EXPECT_NEAR(mean[1], 0.5, 0.05);
}

TEST(NegativeSamplerTest, EmptySamplerThrows) {
  Vocabulary vocab = Parse("a\t5\n");
  NegativeSampler sampler(vocab, 1);
  EXPECT_TRUE(sampler.empty());
  EXPECT_THROW(sampler.SampleContext(3), Error);
}

}  // namespace
}  // namespace conceptlink
