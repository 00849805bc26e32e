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


#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "conceptlink/cdb.h"
#include "conceptlink/error.h"
#include "conceptlink/eval.h"
#include "conceptlink/hr_benchmark.h"
#include "conceptlink/jsonl.h"
#include "conceptlink/pipeline.h"
#include "conceptlink/trainer.h"
#include "conceptlink/vocab.h"

namespace conceptlink {

namespace {

// Settings shared by the model-using commands.
struct RunConfig {
  std::string cdb_path;
  std::string vocab_path;
  std::string input_path;
  std::string out_path;
  std::string lemma_exceptions;
  LinkerConfig linker;
  SpellConfig spell;
  bool no_spell = false;
  std::string emit_mode = "longest";
  std::string cooc_mode = "per_block";
  std::string cooc_out;
  int workers = 1;
};

void AddModelOptions(CLI::App *cmd, RunConfig *rc) {
  cmd->add_option("--cdb", rc->cdb_path, "Concept database file")->required();
  cmd->add_option("--vocab", rc->vocab_path, "Vocabulary file")->required();
  cmd->add_option("--s-long", rc->linker.s_long, "Long context half-width")
      ->capture_default_str();
  cmd->add_option("--s-short", rc->linker.s_short, "Short context half-width")
      ->capture_default_str();
  cmd->add_option("--threshold", rc->linker.similarity_threshold,
                  "Context similarity threshold")
      ->capture_default_str();
  cmd->add_option("--min-count", rc->linker.min_train_count,
                  "Minimum training mentions for a concept to be used")
      ->capture_default_str();
  cmd->add_option("--seed", rc->linker.seed, "Random seed")->capture_default_str();
  cmd->add_option("--workers", rc->workers, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--emit-mode", rc->emit_mode, "longest or all")
      ->capture_default_str()
      ->check(CLI::IsMember({"longest", "all"}));
  cmd->add_option("--allow-untrained-unique", rc->linker.allow_untrained_unique,
                  "Emit unique names that cannot be scored")
      ->capture_default_str();
  cmd->add_option("--max-edits-short", rc->spell.max_edits_short,
                  "Spelling edits allowed for short words")
      ->capture_default_str();
  cmd->add_option("--max-edits-long", rc->spell.max_edits_long,
                  "Spelling edits allowed for long words")
      ->capture_default_str();
  cmd->add_option("--spell-length", rc->spell.length_threshold,
                  "Words at least this long get the long edit budget")
      ->capture_default_str();
  cmd->add_flag("--no-spell", rc->no_spell, "Disable spelling correction");
  cmd->add_option("--lemma-exceptions", rc->lemma_exceptions,
                  "form<TAB>lemma exceptions for the lemmatizer");
}

void ApplyLemmaExceptions(const std::string &path, ConceptDatabase *cdb) {
  if (path.empty()) return;
  auto lemmatizer = std::make_shared<RuleLemmatizer>();
  lemmatizer->LoadExceptionsFile(path);
  cdb->SetLemmatizer(std::move(lemmatizer));
}

// Writes `content` to `path` only after it has been fully produced.
void WriteFile(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write file: " + path);
  out << content;
  if (!out) throw IoError("failed writing file: " + path);
}

std::string Fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

int BuildCdb(const std::string &csv_path, const std::string &out_path,
             int max_words, const std::string &lemma_exceptions,
             std::ostream &out) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) throw IoError("cannot open CSV file: " + csv_path);
  CdbOptions options;
  options.max_name_words = max_words;
  ImportReport report;
  std::shared_ptr<RuleLemmatizer> lemmatizer;
  if (!lemma_exceptions.empty()) {
    lemmatizer = std::make_shared<RuleLemmatizer>();
    lemmatizer->LoadExceptionsFile(lemma_exceptions);
  }
  ConceptDatabase cdb =
      ConceptDatabase::ImportCsv(in, &report, options, std::move(lemmatizer));
  cdb.SaveFile(out_path);
  out << report.accepted << " names, " << cdb.num_concepts() << " concepts\n";
  out << "rejected: " << report.rejected << "\n";
  for (const auto &[line, reason] : report.rejections) {
    out << "  line " << line << ": " << reason << "\n";
  }
  return kExitOk;
}

int Train(const RunConfig &rc, std::ostream &out, std::ostream &err) {
  ConceptDatabase cdb = ConceptDatabase::LoadFile(rc.cdb_path);
  ApplyLemmaExceptions(rc.lemma_exceptions, &cdb);
  Vocabulary vocab = Vocabulary::LoadFile(rc.vocab_path);
  TextNormalizer normalizer(cdb, vocab, rc.spell, !rc.no_spell);
  Trainer trainer(cdb, vocab, normalizer, rc.linker, ParseEmitMode(rc.emit_mode));

  CorpusReader reader(rc.input_path);
  std::string error;
  while (auto doc = reader.Next(&error)) {
    if (!error.empty()) {
      err << "warning: skipping " << error << "\n";
      trainer.RecordFailedDocument();
      continue;
    }
    trainer.TrainDocument(doc->text);
  }
  TrainingReport report = trainer.Finish();
  cdb.SaveFile(rc.out_path);

  out << "documents: " << report.documents << "\n";
  out << "documents skipped: " << report.documents_failed << "\n";
  out << "training mentions: " << report.mentions_used << "\n";
  out << "mentions without context: " << report.mentions_without_context << "\n";
  out << "filtered candidates: " << report.candidates_filtered << "\n";
  out << "concepts trained: " << report.concepts_trained << "\n";
  out << "untrained concepts: " << report.concepts_below_threshold << "\n";
  return kExitOk;
}

int Annotate(const RunConfig &rc, std::ostream &out, std::ostream &err) {
  ConceptDatabase cdb = ConceptDatabase::LoadFile(rc.cdb_path);
  ApplyLemmaExceptions(rc.lemma_exceptions, &cdb);
  Vocabulary vocab = Vocabulary::LoadFile(rc.vocab_path);
  TextNormalizer normalizer(cdb, vocab, rc.spell, !rc.no_spell);
  Annotator annotator(cdb, vocab, normalizer, rc.linker,
                      ParseEmitMode(rc.emit_mode));

  bool any_trained = false;
  for (ConceptId id = 0; id < cdb.num_concepts() && !any_trained; ++id) {
    any_trained = cdb.concept_record(id).has_embedding();
  }
  if (!any_trained) {
    err << "warning: concept database is untrained; only unique names can be "
           "linked\n";
  }

  CoocMatrix cooc(ParseCoocMode(rc.cooc_mode));
  std::ofstream output(rc.out_path, std::ios::binary | std::ios::trunc);
  if (!output) throw IoError("cannot write file: " + rc.out_path);

  // Documents are processed in batches; within a batch each worker takes
  // every workers-th document and output keeps input order.
  const size_t batch_size = 256 * static_cast<size_t>(rc.workers);
  CorpusReader reader(rc.input_path);
  std::vector<CorpusDocument> batch;
  std::vector<std::string> lines;
  std::vector<CoocMatrix> partial(rc.workers, CoocMatrix(cooc.mode()));
  size_t documents = 0, annotations = 0, skipped = 0;
  bool done = false;
  while (!done) {
    batch.clear();
    std::string error;
    while (batch.size() < batch_size) {
      auto doc = reader.Next(&error);
      if (!doc) {
        done = true;
        break;
      }
      if (!error.empty()) {
        err << "warning: skipping " << error << "\n";
        ++skipped;
        continue;
      }
      batch.push_back(std::move(*doc));
    }
    lines.assign(batch.size(), std::string());
    std::vector<size_t> counts(rc.workers, 0);
    auto work = [&](int worker) {
      for (size_t i = worker; i < batch.size(); i += rc.workers) {
        DocumentResult result = annotator.Annotate(batch[i].text, &partial[worker]);
        counts[worker] += result.annotations.size();
        lines[i] = FormatAnnotationLine(batch[i].id, result.annotations);
      }
    };
    if (rc.workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < rc.workers; ++w) threads.emplace_back(work, w);
      for (auto &t : threads) t.join();
    }
    for (const std::string &line : lines) output << line << '\n';
    documents += batch.size();
    for (size_t c : counts) annotations += c;
  }
  output.close();
  if (!output) throw IoError("failed writing file: " + rc.out_path);

  for (const CoocMatrix &m : partial) cooc.Merge(m);
  if (!rc.cooc_out.empty()) {
    std::ostringstream csv;
    cooc.ExportCsv(csv);
    WriteFile(rc.cooc_out, csv.str());
  }
  out << "documents: " << documents << "\n";
  out << "documents skipped: " << skipped << "\n";
  out << "annotations: " << annotations << "\n";
  return kExitOk;
}

int Eval(const std::string &gold_path, const std::string &predicted_path,
         const std::string &json_path, std::ostream &out) {
  auto gold = ReadAnnotationsFile(gold_path);
  auto predicted = ReadAnnotationsFile(predicted_path);
  EvalReport report = Score(gold, predicted);
  out << report.ToTable();
  if (!json_path.empty()) WriteFile(json_path, report.ToJson() + "\n");
  return kExitOk;
}

void PrintRanking(const ConceptDatabase &cdb,
                  const std::vector<std::pair<std::string, double>> &ranking,
                  std::ostream &out) {
  for (const auto &[cui, similarity] : ranking) {
    const ConceptRecord &record = cdb.concept_record(*cdb.FindConcept(cui));
    std::string name =
        record.names.empty() ? "" : cdb.name(record.preferred_name).display;
    out << cui << '\t' << Fixed(similarity, 6) << '\t' << name << '\n';
  }
}

int Benchmark(uint64_t seed, int runs, const std::vector<int> &sizes,
              std::ostream &out) {
  if (runs < 1) throw InvalidArgument("--runs must be >= 1");
  std::vector<double> sums(sizes.size(), 0.0);
  std::vector<int> parts(sizes.size(), 0);
  for (int r = 0; r < runs; ++r) {
    HrBenchmarkOptions options;
    options.seed = seed + r;
    HrBenchmarkData data = GenerateHrBenchmark(options);
    auto rows = RunDisambiguationBenchmark(data, sizes,
                                           BenchmarkLinkerConfig(options.seed));
    for (size_t i = 0; i < rows.size(); ++i) {
      sums[i] += rows[i].mean_f1;
      parts[i] = rows[i].parts;
    }
  }
  out << "size\tparts\tmean_f1\n";
  for (size_t i = 0; i < sizes.size(); ++i) {
    out << sizes[i] << '\t' << parts[i] << '\t' << Fixed(sums[i] / runs, 4)
        << '\n';
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Unsupervised concept recognition and linking"};
  app.require_subcommand(1);

  std::string csv_path, out_path, lemma_exceptions;
  int max_words = 6;
  CLI::App *build = app.add_subcommand("build-cdb", "Build a concept database from CSV");
  build->add_option("--csv", csv_path, "cui,name,semantic_type,abbrev CSV")->required();
  build->add_option("--out", out_path, "Output CDB file")->required();
  build->add_option("--max-words", max_words, "Longest accepted name in words")
      ->capture_default_str();
  build->add_option("--lemma-exceptions", lemma_exceptions,
                    "form<TAB>lemma exceptions for the lemmatizer");

  RunConfig train_rc;
  CLI::App *train = app.add_subcommand("train", "Unsupervised training on a corpus");
  AddModelOptions(train, &train_rc);
  train->add_option("--corpus", train_rc.input_path,
                    "Directory of .txt files or JSON-lines file")
      ->required();
  train->add_option("--out", train_rc.out_path, "Output CDB file")->required();

  RunConfig annotate_rc;
  CLI::App *annotate = app.add_subcommand("annotate", "Annotate documents");
  AddModelOptions(annotate, &annotate_rc);
  annotate->add_option("--input", annotate_rc.input_path,
                       "Directory of .txt files or JSON-lines file")
      ->required();
  annotate->add_option("--out", annotate_rc.out_path, "Output JSON-lines file")
      ->required();
  annotate->add_option("--cooc-mode", annotate_rc.cooc_mode,
                       "per_block or per_occurrence")
      ->capture_default_str()
      ->check(CLI::IsMember({"per_block", "per_occurrence"}));
  annotate->add_option("--cooc-out", annotate_rc.cooc_out,
                       "Write the co-occurrence matrix as CSV");

  std::string gold_path, predicted_path, json_path;
  CLI::App *eval = app.add_subcommand("eval", "Score predictions against gold");
  eval->add_option("--gold", gold_path, "Gold JSON-lines file")->required();
  eval->add_option("--predicted", predicted_path, "Predicted JSON-lines file")
      ->required();
  eval->add_option("--json", json_path, "Also write the report as JSON");

  std::string cdb_path, cui, type;
  size_t k = 8;
  CLI::App *similar = app.add_subcommand("similar", "Most similar concepts");
  similar->add_option("--cdb", cdb_path, "Concept database file")->required();
  similar->add_option("cui", cui, "Query concept")->required();
  similar->add_option("--k", k, "Number of results")->capture_default_str();
  similar->add_option("--type", type, "Restrict to a semantic type");

  std::string pos1, neg, pos2;
  CLI::App *analogy = app.add_subcommand("analogy", "Concepts near pos1 - neg + pos2");
  analogy->add_option("--cdb", cdb_path, "Concept database file")->required();
  analogy->add_option("pos1", pos1)->required();
  analogy->add_option("neg", neg)->required();
  analogy->add_option("pos2", pos2)->required();
  analogy->add_option("--k", k, "Number of results")->capture_default_str();

  uint64_t seed = 0;
  int runs = 1;
  std::vector<int> sizes = {1, 5, 10, 30};
  CLI::App *bench = app.add_subcommand(
      "benchmark", "Disambiguation F1 against training-set size (synthetic HR set)");
  bench->add_option("--seed", seed, "First generator seed")->capture_default_str();
  bench->add_option("--runs", runs, "Number of seeds to average")
      ->capture_default_str();
  bench->add_option("--sizes", sizes, "Training sizes per concept")
      ->delimiter(',')
      ->capture_default_str();

  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitIoError;
  }

  try {
    if (*build) return BuildCdb(csv_path, out_path, max_words, lemma_exceptions, out);
    if (*train) return Train(train_rc, out, err);
    if (*annotate) return Annotate(annotate_rc, out, err);
    if (*eval) return Eval(gold_path, predicted_path, json_path, out);
    if (*similar) {
      ConceptDatabase cdb = ConceptDatabase::LoadFile(cdb_path);
      std::optional<std::string_view> filter;
      if (!type.empty()) filter = type;
      PrintRanking(cdb, cdb.MostSimilar(cui, k, filter), out);
      return kExitOk;
    }
    if (*analogy) {
      ConceptDatabase cdb = ConceptDatabase::LoadFile(cdb_path);
      PrintRanking(cdb, cdb.Analogy(pos1, neg, pos2, k), out);
      return kExitOk;
    }
    if (*bench) return Benchmark(seed, runs, sizes, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kDomain ? kExitDomainError : kExitIoError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitIoError;
  }
  return kExitOk;
}

}  // namespace conceptlink
