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


#include "conceptlink/normalize.h"

#include <fstream>

#include "conceptlink/error.h"

namespace conceptlink {

namespace {

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool HasVowel(std::string_view s) {
  for (char c : s) {
    if (IsVowel(c)) return true;
  }
  return false;
}

// Strips a verbal suffix and undoubles "runn" -> "run".
std::string VerbStem(std::string_view word, size_t suffix_len) {
  std::string stem(word.substr(0, word.size() - suffix_len));
  size_t n = stem.size();
  if (n >= 2 && stem[n - 1] == stem[n - 2] && !IsVowel(stem[n - 1]) &&
      stem[n - 1] != 'l' && stem[n - 1] != 's' && stem[n - 1] != 'z') {
    stem.pop_back();
  }
  return stem;
}

bool Lowercase(std::string_view s) {
  for (char c : s) {
    if (!IsAsciiLower(c)) return false;
  }
  return true;
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    if (!IsWordByte(text[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && IsWordByte(text[j])) ++j;
    Token token;
    token.raw = std::string(text.substr(i, j - i));
    token.norm = AsciiLower(token.raw);
    token.start = i;
    token.end = j;
    token.is_abbrev_shape = IsAbbreviationShape(token.raw);
    tokens.push_back(std::move(token));
    i = j;
  }
  return tokens;
}

void RuleLemmatizer::AddException(std::string_view form,
                                  std::string_view lemma) {
  exceptions_[std::string(form)] = std::string(lemma);
}

void RuleLemmatizer::LoadExceptions(std::istream &in) {
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError("lemma exceptions line " + std::to_string(line_number) +
                       ": expected form<TAB>lemma");
    }
    AddException(std::string_view(line).substr(0, tab),
                 std::string_view(line).substr(tab + 1));
  }
}

void RuleLemmatizer::LoadExceptionsFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lemma exceptions file: " + path);
  LoadExceptions(in);
}

std::string RuleLemmatizer::Lemma(std::string_view word) const {
  auto it = exceptions_.find(word);
  if (it != exceptions_.end()) return it->second;
  if (!Lowercase(word)) return std::string(word);

  const size_t n = word.size();
  if (EndsWith(word, "sses")) return std::string(word.substr(0, n - 2));
  if (EndsWith(word, "ies") && n > 4) {
    return std::string(word.substr(0, n - 3)) + "y";
  }
  if (EndsWith(word, "xes") || EndsWith(word, "zes") ||
      EndsWith(word, "ches") || EndsWith(word, "shes")) {
    return std::string(word.substr(0, n - 2));
  }
  if (EndsWith(word, "s")) {
    if (n > 3 && !EndsWith(word, "ss") && !EndsWith(word, "us") &&
        !EndsWith(word, "is")) {
      return std::string(word.substr(0, n - 1));
    }
    return std::string(word);
  }
  if (EndsWith(word, "ing") && n >= 6 && HasVowel(word.substr(0, n - 3))) {
    return VerbStem(word, 3);
  }
  if (EndsWith(word, "ed") && n >= 5 && HasVowel(word.substr(0, n - 2))) {
    return VerbStem(word, 2);
  }
  return std::string(word);
}

void Lemmatize(std::vector<Token> &tokens, const Lemmatizer &lemmatizer) {
  for (Token &token : tokens) {
    if (token.is_abbrev_shape) continue;
    token.norm = lemmatizer.Lemma(token.norm);
  }
}

}  // namespace conceptlink
