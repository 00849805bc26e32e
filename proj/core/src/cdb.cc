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


#include "conceptlink/cdb.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "conceptlink/error.h"
#include "csv.h"

namespace conceptlink {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Removes one trailing "[...]" or "(...)" group, e.g. "Cancer [Process]".
std::string_view StripTrailingGroup(std::string_view s) {
  s = Trim(s);
  if (s.empty()) return s;
  char close = s.back();
  char open;
  if (close == ']') {
    open = '[';
  } else if (close == ')') {
    open = '(';
  } else {
    return s;
  }
  size_t pos = s.rfind(open);
  if (pos == std::string_view::npos) return s;
  return Trim(s.substr(0, pos));
}

uint64_t EdgeKey(int node, uint32_t token) {
  return (static_cast<uint64_t>(node) << 32) | token;
}

}  // namespace

double Cosine(std::span<const double> a, std::span<const double> b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

ConceptDatabase::ConceptDatabase(CdbOptions options)
    : options_(options), lemmatizer_(std::make_shared<RuleLemmatizer>()) {
  if (options_.max_name_words < 1) {
    throw InvalidArgument("max_name_words must be >= 1");
  }
  node_name_.push_back(-1);
  node_children_.push_back(0);
}

void ConceptDatabase::SetLemmatizer(std::shared_ptr<const Lemmatizer> lemmatizer) {
  if (!lemmatizer) throw InvalidArgument("lemmatizer must not be null");
  lemmatizer_ = std::move(lemmatizer);
}

std::optional<PreparedName> ConceptDatabase::PrepareName(
    std::string_view raw_name, std::optional<bool> abbrev_hint,
    std::string *reason) const {
  std::vector<Token> tokens = Tokenize(StripTrailingGroup(raw_name));
  if (tokens.empty()) {
    *reason = "name is empty after cleanup";
    return std::nullopt;
  }
  if (static_cast<int>(tokens.size()) > options_.max_name_words) {
    *reason = "name has " + std::to_string(tokens.size()) +
              " words, more than the limit of " +
              std::to_string(options_.max_name_words);
    return std::nullopt;
  }
  Lemmatize(tokens, *lemmatizer_);

  PreparedName prepared;
  std::string compact;
  for (const Token &token : tokens) {
    prepared.tokens.push_back(MatchKey(token));
    if (!prepared.display.empty()) prepared.display.push_back(' ');
    prepared.display += token.raw;
    compact += token.raw;
  }
  prepared.is_abbreviation =
      abbrev_hint.value_or(false) || IsAbbreviationShape(compact);
  return prepared;
}

ConceptId ConceptDatabase::GetOrCreateConcept(std::string_view cui) {
  auto it = concept_index_.find(cui);
  if (it != concept_index_.end()) return it->second;
  ConceptId id = static_cast<ConceptId>(concepts_.size());
  ConceptRecord record;
  record.cui = std::string(cui);
  concepts_.push_back(std::move(record));
  concept_index_.emplace(std::string(cui), id);
  return id;
}

NameId ConceptDatabase::InsertName(const PreparedName &prepared) {
  int node = kRootNode;
  for (const std::string &token : prepared.tokens) {
    auto [tok, inserted_token] = token_ids_.try_emplace(
        token, static_cast<uint32_t>(token_ids_.size()));
    auto [edge, inserted_edge] = edges_.try_emplace(
        EdgeKey(node, tok->second), static_cast<int>(node_name_.size()));
    if (inserted_edge) {
      node_name_.push_back(-1);
      node_children_.push_back(0);
      ++node_children_[node];
    }
    node = edge->second;
  }
  if (node_name_[node] < 0) {
    node_name_[node] = static_cast<int>(names_.size());
    NameKey key;
    key.tokens = prepared.tokens;
    key.display = prepared.display;
    names_.push_back(std::move(key));
    max_name_length_ =
        std::max(max_name_length_, static_cast<int>(prepared.tokens.size()));
  }
  NameKey &key = names_[node_name_[node]];
  key.is_abbreviation = key.is_abbreviation || prepared.is_abbreviation;
  return static_cast<NameId>(node_name_[node]);
}

void ConceptDatabase::LinkName(ConceptId concept_id, NameId name_id) {
  ConceptRecord &record = concepts_[concept_id];
  if (std::find(record.names.begin(), record.names.end(), name_id) !=
      record.names.end()) {
    return;
  }
  if (record.names.empty()) record.preferred_name = name_id;
  record.names.push_back(name_id);

  // Keep the concept list ordered by cui; uniqueness follows from its size.
  std::vector<ConceptId> &list = names_[name_id].concepts;
  auto pos = std::lower_bound(list.begin(), list.end(), concept_id,
                              [&](ConceptId a, ConceptId b) {
                                return concepts_[a].cui < concepts_[b].cui;
                              });
  list.insert(pos, concept_id);
}

ConceptDatabase::AddResult ConceptDatabase::AddConcept(
    std::string_view cui, std::string_view raw_name,
    std::optional<std::string_view> semantic_type,
    std::optional<bool> abbrev_hint) {
  AddResult result;
  if (cui.empty()) {
    result.reason = "empty concept id";
    return result;
  }
  if (Trim(raw_name).empty()) {
    result.reason = "empty name";
    return result;
  }
  std::optional<PreparedName> prepared =
      PrepareName(raw_name, abbrev_hint, &result.reason);
  if (!prepared) return result;

  ConceptId concept_id = GetOrCreateConcept(cui);
  NameId name_id = InsertName(*prepared);
  LinkName(concept_id, name_id);
  ConceptRecord &record = concepts_[concept_id];
  if (record.semantic_type.empty() && semantic_type && !semantic_type->empty()) {
    record.semantic_type = std::string(*semantic_type);
  }
  result.accepted = true;
  result.concept_id = concept_id;
  result.name_id = name_id;
  return result;
}

int ConceptDatabase::Child(int node, std::string_view key) const {
  auto tok = token_ids_.find(key);
  if (tok == token_ids_.end()) return -1;
  auto edge = edges_.find(EdgeKey(node, tok->second));
  return edge == edges_.end() ? -1 : edge->second;
}

int ConceptDatabase::FindNode(std::span<const std::string> tokens) const {
  int node = kRootNode;
  for (const std::string &token : tokens) {
    node = Child(node, token);
    if (node < 0) return -1;
  }
  return node;
}

const NameKey *ConceptDatabase::FindName(std::span<const std::string> tokens) const {
  if (tokens.empty()) return nullptr;
  int node = FindNode(tokens);
  if (node < 0 || node_name_[node] < 0) return nullptr;
  return &names_[node_name_[node]];
}

std::vector<std::string> ConceptDatabase::LookupExact(
    std::span<const std::string> tokens) const {
  std::vector<std::string> cuis;
  if (const NameKey *key = FindName(tokens)) {
    for (ConceptId id : key->concepts) cuis.push_back(concepts_[id].cui);
  }
  return cuis;
}

bool ConceptDatabase::IsPrefix(std::span<const std::string> tokens) const {
  if (tokens.empty()) return false;
  int node = FindNode(tokens);
  return node >= 0 && node_children_[node] > 0;
}

std::optional<ConceptId> ConceptDatabase::FindConcept(std::string_view cui) const {
  auto it = concept_index_.find(cui);
  if (it == concept_index_.end()) return std::nullopt;
  return it->second;
}

void ConceptDatabase::SetPreferredName(ConceptId concept_id, NameId name_id) {
  const auto &names = concepts_.at(concept_id).names;
  if (std::find(names.begin(), names.end(), name_id) == names.end()) {
    throw InvalidArgument("preferred name is not a name of concept " +
                          concepts_[concept_id].cui);
  }
  concepts_[concept_id].preferred_name = name_id;
}

std::vector<std::string> ConceptDatabase::NameWords() const {
  std::set<std::string> words;
  for (const NameKey &key : names_) {
    for (const std::string &token : key.tokens) {
      // Abbreviation keys keep uppercase letters and are never targets.
      bool lower = std::none_of(token.begin(), token.end(), IsAsciiUpper);
      if (lower) words.insert(token);
    }
  }
  return {words.begin(), words.end()};
}

void ConceptDatabase::EnsureDim(int dim) {
  if (dim <= 0) throw InvalidArgument("embedding dimension must be positive");
  if (dim_ == 0) {
    dim_ = dim;
  } else if (dim_ != dim) {
    throw DomainError("concept database has dimension " + std::to_string(dim_) +
                      " but the vocabulary has dimension " + std::to_string(dim));
  }
}

void ConceptDatabase::SetEmbeddings(ConceptId id, std::vector<float> long_embedding,
                                    std::vector<float> short_embedding) {
  for (const auto *v : {&long_embedding, &short_embedding}) {
    if (v->empty()) continue;
    if (dim_ == 0) dim_ = static_cast<int>(v->size());
    if (static_cast<int>(v->size()) != dim_) {
      throw DomainError("embedding dimension " + std::to_string(v->size()) +
                        " does not match concept database dimension " +
                        std::to_string(dim_));
    }
  }
  ConceptRecord &record = concepts_.at(id);
  record.embedding_long = std::move(long_embedding);
  record.embedding_short = std::move(short_embedding);
}

std::vector<double> ConceptDatabase::CombinedEmbedding(ConceptId id) const {
  const ConceptRecord &record = concepts_.at(id);
  std::vector<double> combined(dim_, 0.0);
  int parts = 0;
  for (const auto *v : {&record.embedding_long, &record.embedding_short}) {
    if (v->empty()) continue;
    for (int i = 0; i < dim_; ++i) combined[i] += (*v)[i];
    ++parts;
  }
  if (parts > 1) {
    for (double &x : combined) x /= parts;
  }
  return combined;
}

const ConceptRecord &ConceptDatabase::TrainedConcept(std::string_view cui) const {
  auto id = FindConcept(cui);
  if (!id) throw DomainError("unknown concept: " + std::string(cui));
  const ConceptRecord &record = concepts_[*id];
  if (!record.has_embedding()) {
    throw DomainError("concept " + std::string(cui) + " is untrained");
  }
  return record;
}

double ConceptDatabase::Similarity(std::string_view cui_a,
                                   std::string_view cui_b) const {
  TrainedConcept(cui_a);
  TrainedConcept(cui_b);
  auto a = CombinedEmbedding(*FindConcept(cui_a));
  auto b = CombinedEmbedding(*FindConcept(cui_b));
  return Cosine(a, b);
}

std::vector<std::pair<std::string, double>> ConceptDatabase::Rank(
    std::span<const double> query, std::span<const ConceptId> exclude, size_t k,
    std::optional<std::string_view> type_filter) const {
  std::vector<std::pair<std::string, double>> ranked;
  if (k == 0) return ranked;
  for (ConceptId id = 0; id < concepts_.size(); ++id) {
    const ConceptRecord &record = concepts_[id];
    if (!record.has_embedding()) continue;
    if (std::find(exclude.begin(), exclude.end(), id) != exclude.end()) continue;
    if (type_filter && record.semantic_type != *type_filter) continue;
    ranked.emplace_back(record.cui, Cosine(query, CombinedEmbedding(id)));
  }
  auto order = [](const auto &x, const auto &y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  };
  if (ranked.size() > k) {
    std::partial_sort(ranked.begin(), ranked.begin() + k, ranked.end(), order);
    ranked.resize(k);
  } else {
    std::sort(ranked.begin(), ranked.end(), order);
  }
  return ranked;
}

std::vector<std::pair<std::string, double>> ConceptDatabase::MostSimilar(
    std::string_view cui, size_t k,
    std::optional<std::string_view> type_filter) const {
  TrainedConcept(cui);
  ConceptId id = *FindConcept(cui);
  ConceptId exclude[] = {id};
  return Rank(CombinedEmbedding(id), exclude, k, type_filter);
}

std::vector<std::pair<std::string, double>> ConceptDatabase::Analogy(
    std::string_view pos1, std::string_view neg, std::string_view pos2,
    size_t k) const {
  TrainedConcept(pos1);
  TrainedConcept(neg);
  TrainedConcept(pos2);
  ConceptId ids[] = {*FindConcept(pos1), *FindConcept(neg), *FindConcept(pos2)};
  auto a = CombinedEmbedding(ids[0]);
  auto b = CombinedEmbedding(ids[1]);
  auto c = CombinedEmbedding(ids[2]);
  std::vector<double> query(dim_);
  for (int i = 0; i < dim_; ++i) query[i] = a[i] - b[i] + c[i];
  return Rank(query, ids, k, std::nullopt);
}

ConceptDatabase ConceptDatabase::ImportCsv(
    std::istream &in, ImportReport *report, CdbOptions options,
    std::shared_ptr<const Lemmatizer> lemmatizer) {
  ImportReport local;
  if (report == nullptr) report = &local;
  *report = ImportReport();

  CsvReader reader(in);
  std::vector<std::string> fields;
  if (!reader.Next(&fields)) {
    throw ParseError("CDB CSV line 1: missing header");
  }
  if (!fields.empty() && fields[0].rfind("\xEF\xBB\xBF", 0) == 0) {
    fields[0].erase(0, 3);
  }
  const std::vector<std::string> header = {"cui", "name", "semantic_type",
                                           "abbrev"};
  if (fields != header) {
    throw ParseError("CDB CSV line 1: expected header cui,name,semantic_type,abbrev");
  }

  ConceptDatabase cdb(options);
  if (lemmatizer) cdb.SetLemmatizer(std::move(lemmatizer));
  // Row counts per (concept, name) and first-seen order for preferred names.
  std::map<std::pair<ConceptId, NameId>, std::pair<int, int>> votes;
  int order = 0;
  while (reader.Next(&fields)) {
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != 4) {
      throw ParseError("CDB CSV line " + std::to_string(reader.line()) +
                       ": expected 4 columns, got " +
                       std::to_string(fields.size()));
    }
    ++report->rows;
    std::optional<bool> hint;
    if (fields[3] == "1") {
      hint = true;
    } else if (fields[3] == "0") {
      hint = false;
    } else if (!fields[3].empty()) {
      throw ParseError("CDB CSV line " + std::to_string(reader.line()) +
                       ": abbrev must be 0, 1 or empty");
    }
    std::optional<std::string_view> type;
    if (!fields[2].empty()) type = fields[2];
    AddResult added = cdb.AddConcept(fields[0], fields[1], type, hint);
    if (!added.accepted) {
      ++report->rejected;
      report->rejections.emplace_back(reader.line(), added.reason);
      continue;
    }
    ++report->accepted;
    auto [it, inserted] =
        votes.try_emplace({added.concept_id, added.name_id}, 0, order++);
    ++it->second.first;
  }

  std::map<ConceptId, std::pair<NameId, std::pair<int, int>>> best;
  for (const auto &[key, vote] : votes) {
    auto [it, inserted] = best.try_emplace(key.first, key.second, vote);
    const auto &current = it->second.second;
    if (vote.first > current.first ||
        (vote.first == current.first && vote.second < current.second)) {
      it->second = {key.second, vote};
    }
  }
  for (const auto &[concept_id, choice] : best) {
    cdb.SetPreferredName(concept_id, choice.first);
  }
  return cdb;
}

}  // namespace conceptlink
