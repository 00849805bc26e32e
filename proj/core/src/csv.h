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


#ifndef CONCEPTLINK_SRC_CSV_H_
#define CONCEPTLINK_SRC_CSV_H_

#include <istream>
#include <string>
#include <vector>

namespace conceptlink {

// Minimal RFC 4180 reader: comma separated, double-quoted fields may contain
// commas, doubled quotes and line breaks. Accepts LF and CRLF.
class CsvReader {
 public:
  explicit CsvReader(std::istream &in) : in_(in) {}

  // Reads the next record. Returns false at end of input. Throws a parse
  // error on an unterminated quoted field.
  bool Next(std::vector<std::string> *fields);

  // Line on which the last returned record started (1-based).
  int line() const { return record_line_; }

 private:
  std::istream &in_;
  int line_ = 1;
  int record_line_ = 0;
};

}  // namespace conceptlink

#endif  // CONCEPTLINK_SRC_CSV_H_
