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


#ifndef CONCEPTLINK_NORMALIZE_H_
#define CONCEPTLINK_NORMALIZE_H_

#include <cstddef>
#include <istream>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "conceptlink/strings.h"

namespace conceptlink {

// A token of a document. Offsets are byte offsets into the original text.
struct Token {
  std::string raw;
  std::string norm;
  size_t start = 0;
  size_t end = 0;
  bool is_abbrev_shape = false;
};

// Key used to match a token against the name index. Abbreviation-shaped
// tokens match case-sensitively on their raw form; all other tokens match on
// their normalized form (which never contains uppercase letters).
inline const std::string &MatchKey(const Token &token) {
  return token.is_abbrev_shape ? token.raw : token.norm;
}

// Bytes >= 0x80 are treated as word characters so UTF-8 sequences are never
// split.
inline bool IsWordByte(char c) {
  return IsAsciiAlnum(c) || static_cast<unsigned char>(c) >= 0x80;
}

// Splits text into maximal runs of alphanumeric characters. Everything else
// is a separator. norm is initialized to the lowercased raw text.
std::vector<Token> Tokenize(std::string_view text);

class Lemmatizer {
 public:
  virtual ~Lemmatizer() = default;
  virtual std::string Lemma(std::string_view word) const = 0;
};

class IdentityLemmatizer : public Lemmatizer {
 public:
  std::string Lemma(std::string_view word) const override {
    return std::string(word);
  }
};

// Small English suffix stripper with an exceptions dictionary. Rules, first
// match wins, applied only to lowercase words without digits:
//
//   -sses          -> -ss       (classes -> class)
//   -ies  (len>4)  -> -y        (therapies -> therapy)
//   -xes/-zes/-ches/-shes -> drop "es"  (boxes -> box)
//   -s    (len>3, not -ss/-us/-is) -> drop "s"  (kidneys -> kidney)
//   -ing  (stem>=3 with a vowel) -> stem, undoubling a final double
//          consonant other than l/s/z  (running -> run, bleeding -> bleed)
//   -ed   (stem>=3 with a vowel) -> stem, same undoubling (admitted -> admit)
//
// The exceptions dictionary is consulted first.
class RuleLemmatizer : public Lemmatizer {
 public:
  RuleLemmatizer() = default;

  // Reads `form<TAB>lemma` lines.
  void LoadExceptions(std::istream &in);
  void LoadExceptionsFile(const std::string &path);
  void AddException(std::string_view form, std::string_view lemma);

  std::string Lemma(std::string_view word) const override;

 private:
  std::unordered_map<std::string, std::string, StringHash, std::equal_to<>>
      exceptions_;
};

// Replaces norm by its lemma for every token that is not abbreviation-shaped.
void Lemmatize(std::vector<Token> &tokens, const Lemmatizer &lemmatizer);

}  // namespace conceptlink

#endif  // CONCEPTLINK_NORMALIZE_H_
