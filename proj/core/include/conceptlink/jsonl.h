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


#ifndef CONCEPTLINK_JSONL_H_
#define CONCEPTLINK_JSONL_H_

#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "conceptlink/pipeline.h"

namespace conceptlink {

// Annotations of one document as exchanged in JSON-lines files:
//   {"id": str, "annotations": [{"start": int, "end": int, "text": str,
//                                "cui": str, "confidence": float}]}
struct AnnotatedDocument {
  std::string id;
  std::vector<Annotation> annotations;
};

// One output line (without trailing newline). Confidences are written with
// exactly six decimal digits.
std::string FormatAnnotationLine(std::string_view id,
                                 std::span<const Annotation> annotations);

// Parses an annotation file. "confidence" and "text" are optional so gold
// files may omit them. Throws a parse error naming the line.
std::vector<AnnotatedDocument> ReadAnnotationsJsonl(std::istream &in);
std::vector<AnnotatedDocument> ReadAnnotationsFile(const std::string &path);

struct CorpusDocument {
  std::string id;
  std::string text;
};

// Streams documents from either a directory of .txt files (sorted by file
// name; the id is the file stem) or a JSON-lines file of
// {"id": ..., "text": ...} objects. Only one document is held at a time.
class CorpusReader {
 public:
  explicit CorpusReader(const std::string &path);

  // Returns the next document, or nullopt at the end. A document that cannot
  // be read is reported through `error` (and the call returns a document
  // with an empty id) instead of throwing.
  std::optional<CorpusDocument> Next(std::string *error);

 private:
  bool directory_ = false;
  std::vector<std::filesystem::path> files_;
  size_t next_file_ = 0;
  std::ifstream stream_;
  int line_ = 0;
};

}  // namespace conceptlink

#endif  // CONCEPTLINK_JSONL_H_
