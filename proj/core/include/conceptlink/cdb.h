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


#ifndef CONCEPTLINK_CDB_H_
#define CONCEPTLINK_CDB_H_

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "conceptlink/cooc.h"
#include "conceptlink/normalize.h"
#include "conceptlink/strings.h"

namespace conceptlink {

using ConceptId = uint32_t;
using NameId = uint32_t;

// A normalized concept name. The same token sequence added for several
// concepts is a single NameKey listing all of them.
struct NameKey {
  // Match keys, see MatchKey(): lemmatized lowercase tokens, except
  // abbreviation-shaped tokens which keep their raw uppercase form.
  std::vector<std::string> tokens;
  // Cleaned surface form of the first occurrence, e.g. "Kidney Failure".
  std::string display;
  bool is_abbreviation = false;
  // Concepts carrying this name, ordered by cui.
  std::vector<ConceptId> concepts;

  bool is_unique() const { return concepts.size() == 1; }
};

struct ConceptRecord {
  std::string cui;
  std::vector<NameId> names;
  NameId preferred_name = 0;
  std::string semantic_type;
  // Learned context embeddings; empty until the concept is first trained.
  std::vector<float> embedding_long;
  std::vector<float> embedding_short;
  // Number of training mentions seen.
  uint64_t train_count = 0;

  bool has_embedding() const {
    return !embedding_long.empty() || !embedding_short.empty();
  }
};

struct CdbOptions {
  // Names with more tokens than this are rejected.
  int max_name_words = 6;
};

// Outcome of preprocessing one raw dictionary name.
struct PreparedName {
  std::vector<std::string> tokens;
  std::string display;
  bool is_abbreviation = false;
};

struct ImportReport {
  int rows = 0;
  int accepted = 0;
  int rejected = 0;
  // (line number, reason) for every rejected row.
  std::vector<std::pair<int, std::string>> rejections;
};

// Concepts, the token-level name index, learned embeddings and the
// co-occurrence matrix.
//
// The name index is a token trie: every indexed name and every prefix of one
// is a node, so "is this window a name" and "can this window still grow into
// a name" are both answered by walking one edge per token.
class ConceptDatabase {
 public:
  static constexpr int kRootNode = 0;

  explicit ConceptDatabase(CdbOptions options = {});

  ConceptDatabase(ConceptDatabase &&) = default;
  ConceptDatabase &operator=(ConceptDatabase &&) = default;
  ConceptDatabase(const ConceptDatabase &) = default;
  ConceptDatabase &operator=(const ConceptDatabase &) = default;

  struct AddResult {
    bool accepted = false;
    std::string reason;
    ConceptId concept_id = 0;
    NameId name_id = 0;
  };

  // Preprocesses `raw_name` and adds it to concept `cui`, creating the
  // concept on first use. Rejections are reported, not thrown.
  AddResult AddConcept(std::string_view cui, std::string_view raw_name,
                       std::optional<std::string_view> semantic_type = {},
                       std::optional<bool> abbrev_hint = {});

  // Name cleanup: drops one trailing "[...]" or "(...)" group, splits on
  // non-alphanumeric characters, lemmatizes, and decides abbreviation
  // status. Returns nullopt with `reason` set when the name is rejected.
  std::optional<PreparedName> PrepareName(std::string_view raw_name,
                                          std::optional<bool> abbrev_hint,
                                          std::string *reason) const;

  // Concepts whose name equals `tokens` exactly (match keys), by cui.
  std::vector<std::string> LookupExact(std::span<const std::string> tokens) const;
  // True iff `tokens` is a proper prefix of some indexed name.
  bool IsPrefix(std::span<const std::string> tokens) const;
  // Name whose keys equal `tokens`, or nullptr.
  const NameKey *FindName(std::span<const std::string> tokens) const;

  // Trie navigation. Child returns -1 when there is no edge.
  int Child(int node, std::string_view key) const;
  // Name id stored at a node, or -1.
  int NameAtNode(int node) const { return node_name_[node]; }
  bool HasChildren(int node) const { return node_children_[node] > 0; }
  int max_name_length() const { return max_name_length_; }

  size_t num_concepts() const { return concepts_.size(); }
  size_t num_names() const { return names_.size(); }
  const ConceptRecord &concept_record(ConceptId id) const { return concepts_[id]; }
  ConceptRecord &mutable_concept(ConceptId id) { return concepts_[id]; }
  const NameKey &name(NameId id) const { return names_[id]; }
  std::optional<ConceptId> FindConcept(std::string_view cui) const;
  void SetPreferredName(ConceptId concept_id, NameId name_id);

  // Distinct lowercase name tokens, the targets of spelling correction.
  std::vector<std::string> NameWords() const;

  // Embedding dimension, 0 while no concept has an embedding.
  int dim() const { return dim_; }
  // Fixes the embedding dimension; throws if a different one is already set.
  void EnsureDim(int dim);
  // Stores trained embeddings for a concept; fixes dim() on first use.
  void SetEmbeddings(ConceptId id, std::vector<float> long_embedding,
                     std::vector<float> short_embedding);
  // Mean of the long and short embeddings that are present.
  std::vector<double> CombinedEmbedding(ConceptId id) const;

  // Cosine similarity of two concepts' combined embeddings. Throws a domain
  // error if either concept is unknown or untrained.
  double Similarity(std::string_view cui_a, std::string_view cui_b) const;

  // The k concepts most similar to `cui` (itself excluded), optionally
  // restricted to a semantic type. Descending similarity, ties by cui.
  std::vector<std::pair<std::string, double>> MostSimilar(
      std::string_view cui, size_t k,
      std::optional<std::string_view> type_filter = {}) const;

  // Concepts closest to e(pos1) - e(neg) + e(pos2), inputs excluded.
  std::vector<std::pair<std::string, double>> Analogy(std::string_view pos1,
                                                      std::string_view neg,
                                                      std::string_view pos2,
                                                      size_t k) const;

  CoocMatrix &cooc() { return cooc_; }
  const CoocMatrix &cooc() const { return cooc_; }

  const CdbOptions &options() const { return options_; }

  // Lemmatizer applied to name tokens by AddConcept. Annotation must use the
  // same lemmatizer for names to match. Defaults to RuleLemmatizer.
  void SetLemmatizer(std::shared_ptr<const Lemmatizer> lemmatizer);
  const Lemmatizer &lemmatizer() const { return *lemmatizer_; }

  // Reads a `cui,name,semantic_type,abbrev` CSV. Rows rejected by
  // AddConcept are counted in `report`; a missing header or a wrong column
  // count is a parse error. The preferred name of each concept is the name
  // on the most rows, ties broken by first occurrence. A null `lemmatizer`
  // keeps the default.
  static ConceptDatabase ImportCsv(
      std::istream &in, ImportReport *report, CdbOptions options = {},
      std::shared_ptr<const Lemmatizer> lemmatizer = nullptr);

  // Binary container: magic "CDB1", little-endian integers, float32
  // embeddings. The trie is rebuilt on load.
  void Save(std::ostream &out) const;
  static ConceptDatabase Load(std::istream &in);
  void SaveFile(const std::string &path) const;
  static ConceptDatabase LoadFile(const std::string &path);

 private:
  ConceptId GetOrCreateConcept(std::string_view cui);
  NameId InsertName(const PreparedName &prepared);
  void LinkName(ConceptId concept_id, NameId name_id);
  int FindNode(std::span<const std::string> tokens) const;
  const ConceptRecord &TrainedConcept(std::string_view cui) const;
  std::vector<std::pair<std::string, double>> Rank(
      std::span<const double> query, std::span<const ConceptId> exclude,
      size_t k, std::optional<std::string_view> type_filter) const;

  CdbOptions options_;
  std::shared_ptr<const Lemmatizer> lemmatizer_;

  std::vector<ConceptRecord> concepts_;
  std::unordered_map<std::string, ConceptId, StringHash, std::equal_to<>>
      concept_index_;
  std::vector<NameKey> names_;

  // Token interning and trie edges keyed by (parent node << 32 | token id).
  std::unordered_map<std::string, uint32_t, StringHash, std::equal_to<>>
      token_ids_;
  std::unordered_map<uint64_t, int> edges_;
  std::vector<int> node_name_;
  std::vector<int> node_children_;
  int max_name_length_ = 0;

  int dim_ = 0;
  CoocMatrix cooc_;
};

// Cosine similarity; 0 when either vector is all zeros.
double Cosine(std::span<const double> a, std::span<const double> b);

}  // namespace conceptlink

#endif  // CONCEPTLINK_CDB_H_
