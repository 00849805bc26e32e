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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "conceptlink/cdb.h"
#include "conceptlink/context.h"
#include "conceptlink/detect.h"
#include "conceptlink/hr_benchmark.h"
#include "conceptlink/jsonl.h"
#include "conceptlink/pipeline.h"
#include "conceptlink/spell.h"
#include "conceptlink/trainer.h"
#include "conceptlink/vocab.h"
#include "test_support.h"

namespace conceptlink {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Format(const char *fmt, ...) __attribute__((format(printf, 1, 2)));
std::string Format(const char *fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

int Cli(std::vector<std::string> args, std::string *out = nullptr) {
  args.insert(args.begin(), "conceptlink");
  std::ostringstream o, e;
  int code = RunCli(args, o, e);
  if (out != nullptr) *out = o.str() + e.str();
  return code;
}

// 1. Mean F1 over 10 seeds is nondecreasing in training size and reaches
// 0.85 at 30 examples per concept.
Outcome TrainingSizeCurve() {
  auto start = Clock::now();
  const std::vector<int> sizes = {1, 5, 10, 30};
  std::vector<double> mean(sizes.size(), 0.0);
  const int seeds = 10;
  for (int seed = 0; seed < seeds; ++seed) {
    HrBenchmarkOptions options;
    options.seed = seed;
    HrBenchmarkData data = GenerateHrBenchmark(options);
    auto rows = RunDisambiguationBenchmark(data, sizes, BenchmarkLinkerConfig(seed));
    for (size_t i = 0; i < rows.size(); ++i) mean[i] += rows[i].mean_f1 / seeds;
  }
  double elapsed = Seconds(start);
  bool monotone = true;
  for (size_t i = 1; i < mean.size(); ++i) monotone &= mean[i] >= mean[i - 1];
  Outcome o;
  o.pass = monotone && mean.back() >= 0.85 && elapsed < 30.0;
  o.detail = Format("F1@1=%.4f F1@5=%.4f F1@10=%.4f F1@30=%.4f, %.2fs", mean[0],
                    mean[1], mean[2], mean[3], elapsed);
  return o;
}

// 2. The four entities of the clinical note after unsupervised training.
Outcome ClinicalQuartet() {
  auto start = Clock::now();
  testing::ClinicalFixture f = testing::MakeClinicalFixture();
  TextNormalizer normalizer(f.cdb, f.vocab);
  Trainer trainer(f.cdb, f.vocab, normalizer);
  for (const std::string &doc : f.training) trainer.TrainDocument(doc);
  TrainingReport report = trainer.Finish();
  Annotator annotator(f.cdb, f.vocab, normalizer);
  auto night = annotator.Annotate(f.night_text).annotations;
  auto renal = annotator.Annotate(f.renal_text).annotations;

  auto has = [](const std::vector<Annotation> &list, const std::string &text,
                size_t start, const char *cui) {
    for (const Annotation &a : list) {
      if (a.start == start && a.end == start + text.size() && a.cui == cui) return true;
    }
    return false;
  };
  const std::string &t = f.night_text;
  int hits = 0;
  hits += has(night, "HR", t.find("HR"), testing::kHeartRate);
  hits += has(night, "pattient", t.find("pattient"), testing::kPatient);
  hits += has(night, "HR", t.rfind("HR"), testing::kHour);
  bool e4 = has(renal, "Failure of kidneys", f.renal_text.find("Failure of kidneys"),
                testing::kKidneyFailure);
  if (e4) {
    const ConceptRecord &kf = f.cdb.concept_record(*f.cdb.FindConcept(testing::kKidneyFailure));
    std::string preferred = f.cdb.name(kf.preferred_name).display;
    for (char &c : preferred) c = static_cast<char>(std::tolower(c));
    e4 = preferred == "kidney failure";
  }
  hits += e4;
  double elapsed = Seconds(start);
  Outcome o;
  o.pass = hits == 4 && report.mentions_used >= 150 && elapsed < 10.0;
  o.detail = Format("%d/4 entities, %llu training mentions, %.2fs", hits,
                    static_cast<unsigned long long>(report.mentions_used), elapsed);
  return o;
}

// 3. Update rules on random vectors and the 1/n learning-rate schedule.
Outcome UpdateRules() {
  testing::Random random(2024);
  int positive_failures = 0, negative_failures = 0, negative_checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> v = random.GaussianVector(16);
    std::vector<double> ctx = random.GaussianVector(16);
    double lr = 1.0 / (1 + random.Below(100));
    double before = Cosine(v, ctx);
    std::vector<double> updated = v;
    ApplyPositiveUpdate(updated, ctx, lr);
    if (before < 1.0 - 1e-9 && !(Cosine(updated, ctx) > before)) ++positive_failures;

    std::vector<double> negative = random.GaussianVector(16);
    double before_n = Cosine(v, negative);
    std::vector<double> pushed = v;
    ApplyNegativeUpdate(pushed, negative, lr);
    if (before_n > 0) {
      ++negative_checked;
      if (Cosine(pushed, negative) > before_n + 1e-9) ++negative_failures;
    }
  }

  // Schedule, observed on real training.
  testing::ClinicalFixture f = testing::MakeClinicalFixture();
  TextNormalizer normalizer(f.cdb, f.vocab);
  Trainer trainer(f.cdb, f.vocab, normalizer);
  std::map<ConceptId, uint64_t> seen;
  int schedule_failures = 0, updates = 0;
  trainer.set_observer([&](const UpdateEvent &e) {
    ++updates;
    if (!e.negative && e.half_width == 9 && e.count != ++seen[e.concept_id]) ++schedule_failures;
    if (e.learning_rate != 1.0 / static_cast<double>(e.count)) ++schedule_failures;
  });
  for (const std::string &doc : f.training) trainer.TrainDocument(doc);

  Outcome o;
  o.pass = positive_failures == 0 && negative_failures == 0 && schedule_failures == 0 &&
           updates > 0;
  o.detail = Format("1000 pairs at D=16: %d positive, %d/%d negative violations; "
                    "%d lr violations over %d updates",
                    positive_failures, negative_failures, negative_checked,
                    schedule_failures, updates);
  return o;
}

// 4. `all`-mode detection equals the brute-force span scan.
Outcome DetectionOracle() {
  testing::Random random(77);
  const std::vector<std::string> words = {"a", "b", "c", "d", "HR", "kidneys", "kidney"};
  const int kinds = static_cast<int>(words.size());
  int discrepancies = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    ConceptDatabase cdb;
    for (int n = random.Below(13); n > 0; --n) {
      std::string name;
      for (int k = 1 + random.Below(4); k > 0; --k) name += words[random.Below(kinds)] + " ";
      cdb.AddConcept("C" + std::to_string(random.Below(8)), name);
    }
    std::string text;
    for (int n = random.Below(9); n > 0; --n) text += words[random.Below(kinds)] + " ";
    std::vector<Token> tokens = Tokenize(text);
    Lemmatize(tokens, cdb.lemmatizer());
    std::vector<Candidate> got = DetectCandidates(tokens, cdb, EmitMode::kAll);
    std::vector<Candidate> want = testing::BruteForceCandidates(tokens, cdb);
    bool same = got.size() == want.size();
    for (size_t i = 0; same && i < got.size(); ++i) {
      same = got[i].first_token == want[i].first_token &&
             got[i].last_token == want[i].last_token && got[i].name_id == want[i].name_id;
    }
    discrepancies += !same;
  }
  return {discrepancies == 0, Format("10000 instances, %d discrepancies", discrepancies)};
}

// 5. Empirical negative-sampling frequencies.
Outcome SamplerDistribution() {
  Vocabulary vocab;
  for (int c = 1; c <= 10; ++c) vocab.Add("w" + std::to_string(c), c, std::vector<float>{1.0f});
  NegativeSampler sampler(vocab, 31337);
  std::vector<int> hits(vocab.size(), 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++hits[sampler.SampleIndex()];
  double norm = 0.0;
  for (int c = 1; c <= 10; ++c) norm += std::pow(c, 0.75);
  double worst = 0.0;
  for (int i = 0; i < vocab.size(); ++i) {
    double expected = std::pow(static_cast<double>(vocab.entry(i).count), 0.75) / norm;
    worst = std::max(worst, std::fabs(hits[i] / static_cast<double>(draws) - expected));
  }
  return {worst < 0.01, Format("max deviation %.5f over %d draws", worst, draws)};
}

// 6. Corrections land on concept-name words within budget; abbreviations
// and vocabulary words are untouched.
Outcome SpellContract() {
  const std::vector<std::string> targets = {
      "patient", "kidney", "failure", "heart", "rate", "hazard", "ratio", "hour",
      "fever", "cough", "asthma", "diabetes", "insulin", "aspirin", "morphine",
      "pain", "chest", "stroke", "sepsis", "anemia", "renal", "hepatic", "lung",
      "cancer", "tumour", "biopsy", "nausea", "vomiting", "rash", "edema",
      "pneumonia", "fracture", "infection", "dialysis", "creatinine", "glucose",
      "pressure", "blood", "oxygen", "saturation"};
  Vocabulary vocab;
  testing::Random random(555);
  for (const std::string &w : targets) vocab.Add(w, 10 + random.Below(5000));
  const std::vector<std::string> common = {"the", "was", "given", "night", "noted",
                                           "heat", "hearth", "rates", "caner"};
  for (const std::string &w : common) vocab.Add(w, 100 + random.Below(10000));
  SpellChecker checker(vocab, targets);
  const SpellConfig &config = checker.config();

  int violations = 0, corrected = 0, missed = 0;
  for (int i = 0; i < 200; ++i) {
    std::string word = targets[random.Below(static_cast<int>(targets.size()))];
    int budget = config.Budget(word.size());
    for (int e = 1 + random.Below(budget); e > 0; --e) {
      size_t pos = random.Below(static_cast<int>(word.size()));
      char c = static_cast<char>('a' + random.Below(26));
      switch (random.Below(4)) {
        case 0: if (word.size() > 2) word.erase(pos, 1); break;
        case 1: word.insert(word.begin() + pos, c); break;
        case 2: word[pos] = c; break;
        default: if (pos + 1 < word.size()) std::swap(word[pos], word[pos + 1]);
      }
    }
    std::string out = checker.Correct(word, false);
    bool reachable = false;
    for (const std::string &t : targets) {
      reachable |= testing::DamerauLevenshtein(word, t) <= config.Budget(word.size());
    }
    if (vocab.Contains(word)) {
      violations += out != word;
    } else if (out != word) {
      ++corrected;
      bool is_target = std::find(targets.begin(), targets.end(), out) != targets.end();
      if (!is_target || testing::DamerauLevenshtein(word, out) > config.Budget(word.size())) {
        ++violations;
      }
    } else if (reachable) {
      ++missed;
    }
  }
  for (const char *abbrev : {"HR", "CVA", "FDP", "PE", "MI"}) {
    violations += checker.Correct(abbrev, true) != abbrev;
  }
  for (const std::string &w : common) violations += checker.Correct(w, false) != w;
  return {violations == 0 && missed == 0,
          Format("200 misspellings: %d corrected, %d missed, %d violations", corrected,
                 missed, violations)};
}

// 7. Analogy through the command line.
Outcome AnalogyCli() {
  testing::TempDir dir;
  ConceptDatabase cdb;
  const std::pair<const char *, std::vector<float>> concepts[] = {
      {"C0035078", {1, 1, 0}},   // kidney failure
      {"C0022646", {1, 0, 0}},   // kidney
      {"C0018787", {0, 0, 1}},   // heart
      {"C0018801", {0, 1, 1}},   // heart failure
      {"C0009450", {0.2f, 0.1f, 0.3f}}};
  for (const auto &[cui, v] : concepts) {
    auto added = cdb.AddConcept(cui, cui);
    cdb.SetEmbeddings(added.concept_id, v, v);
    cdb.mutable_concept(added.concept_id).train_count = 10;
  }
  cdb.SaveFile(dir.File("cdb.bin"));
  std::string out;
  int code = Cli({"analogy", "--cdb", dir.File("cdb.bin"), "C0035078", "C0022646", "C0018787"},
                 &out);
  bool first = out.rfind("C0018801\t", 0) == 0;
  std::string head = out.substr(0, out.find('\n'));
  return {code == 0 && first, Format("exit %d, top: %s", code, head.c_str())};
}

// 8. Two train + annotate runs give identical bytes.
Outcome Reproducibility() {
  testing::TempDir dir;
  testing::ClinicalFixture f = testing::MakeClinicalFixture();
  testing::WriteText(dir.File("cdb.csv"), f.cdb_csv);
  testing::WriteText(dir.File("vocab.txt"), testing::VocabText(f.vocab));
  std::string corpus, input;
  for (size_t i = 0; i < f.training.size(); ++i) {
    corpus += "{\"id\": \"t" + std::to_string(i) + "\", \"text\": \"" + f.training[i] + "\"}\n";
  }
  for (int i = 0; i < 20; ++i) {
    input += "{\"id\": \"n" + std::to_string(i) + "\", \"text\": \"" + f.night_text + "\"}\n";
    input += "{\"id\": \"e" + std::to_string(i) + "\", \"text\": \"" + f.training[i * 7] + "\"}\n";
  }
  testing::WriteText(dir.File("corpus.jsonl"), corpus);
  testing::WriteText(dir.File("input.jsonl"), input);
  int failures = Cli({"build-cdb", "--csv", dir.File("cdb.csv"), "--out", dir.File("cdb.bin")});
  for (const char *run : {"a", "b"}) {
    std::string trained = dir.File(std::string("trained_") + run + ".bin");
    failures += Cli({"train", "--cdb", dir.File("cdb.bin"), "--vocab", dir.File("vocab.txt"),
                     "--corpus", dir.File("corpus.jsonl"), "--out", trained, "--seed", "13"}) != 0;
    failures += Cli({"annotate", "--cdb", trained, "--vocab", dir.File("vocab.txt"), "--input",
                     dir.File("input.jsonl"), "--out",
                     dir.File(std::string("annotations_") + run + ".jsonl"), "--seed", "13",
                     "--workers", "1"}) != 0;
  }
  std::string cdb_a = testing::ReadText(dir.File("trained_a.bin"));
  std::string ann_a = testing::ReadText(dir.File("annotations_a.jsonl"));
  bool same_cdb = !cdb_a.empty() && cdb_a == testing::ReadText(dir.File("trained_b.bin"));
  bool same_ann = !ann_a.empty() && ann_a == testing::ReadText(dir.File("annotations_b.jsonl"));
  return {failures == 0 && same_cdb && same_ann,
          Format("CDB %s (%zu bytes), annotations %s (%zu bytes)",
                 same_cdb ? "identical" : "DIFFERENT", cdb_a.size(),
                 same_ann ? "identical" : "DIFFERENT", ann_a.size())};
}

// 9. 10,000 documents of ~200 tokens against 100,000 names, single core.
Outcome Scale() {
  testing::TempDir dir;
  testing::Random random(4242);
  const int lexicon_size = 20000, dim = 50;
  std::vector<std::string> lexicon;
  std::set<std::string> seen;
  while (static_cast<int>(lexicon.size()) < lexicon_size) {
    std::string w;
    for (int n = 4 + random.Below(6); n > 0; --n) w += static_cast<char>('a' + random.Below(26));
    if (seen.insert(w).second) lexicon.push_back(w);
  }
  Vocabulary vocab;
  std::vector<float> v(dim);
  for (const std::string &w : lexicon) {
    for (float &x : v) x = static_cast<float>(random.Gaussian());
    vocab.Add(w, 1 + random.Below(100000), v);
  }
  ConceptDatabase cdb;
  std::vector<std::string> names;
  for (int i = 0; cdb.num_names() < 100000; ++i) {
    std::string name;
    for (int k = 1 + random.Below(4); k > 0; --k) {
      if (!name.empty()) name += ' ';
      name += lexicon[random.Below(lexicon_size)];
    }
    // About one name in ten is shared with another concept.
    if (i > 0 && random.Below(10) == 0) name = names[random.Below(static_cast<int>(names.size()))];
    cdb.AddConcept(Format("C%07d", i), name);
    names.push_back(name);
  }
  cdb.SaveFile(dir.File("cdb.bin"));
  {
    std::ofstream out(dir.File("vocab.txt"));
    vocab.Save(out);
  }
  auto document = [&]() {
    std::string text;
    int tokens = 0;
    while (tokens < 200) {
      if (random.Below(10) == 0) {
        const std::string &name = names[random.Below(static_cast<int>(names.size()))];
        text += name;
        tokens += 1 + static_cast<int>(std::count(name.begin(), name.end(), ' '));
      } else {
        std::string w = lexicon[random.Below(lexicon_size)];
        if (random.Below(100) == 0) w[random.Below(static_cast<int>(w.size()))] = 'q';
        text += w;
        ++tokens;
      }
      text += random.Below(12) == 0 ? ". " : " ";
    }
    return text;
  };
  {
    std::ofstream train(dir.File("train.jsonl"));
    for (int i = 0; i < 500; ++i) train << "{\"id\": " << i << ", \"text\": \"" << document() << "\"}\n";
    std::ofstream input(dir.File("input.jsonl"));
    for (int i = 0; i < 10000; ++i) input << "{\"id\": " << i << ", \"text\": \"" << document() << "\"}\n";
  }
  if (Cli({"train", "--cdb", dir.File("cdb.bin"), "--vocab", dir.File("vocab.txt"), "--corpus",
           dir.File("train.jsonl"), "--out", dir.File("trained.bin")}) != 0) {
    return {false, "training failed"};
  }
  auto start = Clock::now();
  int code = Cli({"annotate", "--cdb", dir.File("trained.bin"), "--vocab", dir.File("vocab.txt"),
                  "--input", dir.File("input.jsonl"), "--out", dir.File("out.jsonl"),
                  "--workers", "1"});
  double elapsed = Seconds(start);
  std::ifstream out(dir.File("out.jsonl"));
  size_t lines = 0, annotations = 0;
  std::string line;
  while (std::getline(out, line)) {
    ++lines;
    size_t pos = 0;
    while ((pos = line.find("\"cui\"", pos)) != std::string::npos) ++annotations, ++pos;
  }
  return {code == 0 && lines == 10000 && elapsed < 60.0,
          Format("%zu documents, %zu annotations, %zu names, %.2fs (load + annotate + write)",
                 lines, annotations, cdb.num_names(), elapsed)};
}

}  // namespace
}  // namespace conceptlink

int main() {
  using conceptlink::Outcome;
  const std::pair<const char *, std::function<Outcome()>> criteria[] = {
      {"training-size curve", conceptlink::TrainingSizeCurve},
      {"clinical quartet", conceptlink::ClinicalQuartet},
      {"update rules", conceptlink::UpdateRules},
      {"detection oracle", conceptlink::DetectionOracle},
      {"negative sampler", conceptlink::SamplerDistribution},
      {"spell checker", conceptlink::SpellContract},
      {"analogy", conceptlink::AnalogyCli},
      {"reproducibility", conceptlink::Reproducibility},
      {"scale", conceptlink::Scale},
  };
  int failed = 0, index = 0;
  for (const auto &[name, check] : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception &e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failed += !outcome.pass;
    std::printf("%s %d %s: %s\n", outcome.pass ? "PASS" : "FAIL", index, name,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
