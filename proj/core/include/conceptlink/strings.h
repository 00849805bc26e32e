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


#ifndef CONCEPTLINK_STRINGS_H_
#define CONCEPTLINK_STRINGS_H_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace conceptlink {

// Transparent hash so unordered containers keyed by std::string can be
// probed with a string_view.
struct StringHash {
  using is_transparent = void;
  size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>()(s);
  }
};

inline bool IsAsciiAlnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

inline bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool IsAsciiLower(char c) { return c >= 'a' && c <= 'z'; }

inline std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (IsAsciiUpper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

inline bool HasDigit(std::string_view s) {
  for (char c : s) {
    if (IsAsciiDigit(c)) return true;
  }
  return false;
}

// Short all-uppercase words like "HR" or "CVA" are treated as
// abbreviations: at most four characters, at least one letter, and no
// lowercase letters.
inline bool IsAbbreviationShape(std::string_view raw) {
  if (raw.empty() || raw.size() > 4) return false;
  bool letter = false;
  for (char c : raw) {
    if (IsAsciiLower(c)) return false;
    if (IsAsciiUpper(c)) letter = true;
  }
  return letter;
}

}  // namespace conceptlink

#endif  // CONCEPTLINK_STRINGS_H_
