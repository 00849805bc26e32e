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


#include "conceptlink/jsonl.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "conceptlink/error.h"
#include "json.hpp"

namespace conceptlink {

using nlohmann::json;

namespace {

std::string JsonString(std::string_view s) {
  return json(std::string(s)).dump(-1, ' ', false,
                                   json::error_handler_t::replace);
}

std::string IdString(const json &value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<int64_t>());
  throw ParseError("document id must be a string or an integer");
}

}  // namespace

std::string FormatAnnotationLine(std::string_view id,
                                 std::span<const Annotation> annotations) {
  std::string line = "{\"id\": " + JsonString(id) + ", \"annotations\": [";
  char number[64];
  for (size_t i = 0; i < annotations.size(); ++i) {
    const Annotation &a = annotations[i];
    if (i > 0) line += ", ";
    std::snprintf(number, sizeof(number), "%.6f", a.confidence);
    line += "{\"start\": " + std::to_string(a.start) +
            ", \"end\": " + std::to_string(a.end) +
            ", \"text\": " + JsonString(a.text) +
            ", \"cui\": " + JsonString(a.cui) + ", \"confidence\": " + number +
            "}";
  }
  line += "]}";
  return line;
}

std::vector<AnnotatedDocument> ReadAnnotationsJsonl(std::istream &in) {
  std::vector<AnnotatedDocument> documents;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (std::all_of(line.begin(), line.end(),
                    [](char c) { return c == ' ' || c == '\r' || c == '\t'; })) {
      continue;
    }
    auto where = [&] { return "annotation line " + std::to_string(line_number); };
    try {
      json object = json::parse(line);
      AnnotatedDocument doc;
      doc.id = IdString(object.at("id"));
      for (const json &item : object.at("annotations")) {
        Annotation a;
        a.start = item.at("start").get<size_t>();
        a.end = item.at("end").get<size_t>();
        a.cui = item.at("cui").get<std::string>();
        if (item.contains("text")) a.text = item.at("text").get<std::string>();
        if (item.contains("confidence")) {
          a.confidence = item.at("confidence").get<double>();
        }
        if (a.end < a.start) throw ParseError("span end precedes start");
        doc.annotations.push_back(std::move(a));
      }
      documents.push_back(std::move(doc));
    } catch (const json::exception &e) {
      throw ParseError(where() + ": " + e.what());
    } catch (const Error &e) {
      throw ParseError(where() + ": " + e.what());
    }
  }
  return documents;
}

std::vector<AnnotatedDocument> ReadAnnotationsFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open annotation file: " + path);
  return ReadAnnotationsJsonl(in);
}

CorpusReader::CorpusReader(const std::string &path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    directory_ = true;
    for (const auto &entry : fs::directory_iterator(path, ec)) {
      if (entry.path().extension() == ".txt") files_.push_back(entry.path());
    }
    if (ec) throw IoError("cannot list corpus directory: " + path);
    std::sort(files_.begin(), files_.end());
    return;
  }
  stream_.open(path);
  if (!stream_) throw IoError("cannot open corpus: " + path);
}

std::optional<CorpusDocument> CorpusReader::Next(std::string *error) {
  error->clear();
  if (directory_) {
    if (next_file_ >= files_.size()) return std::nullopt;
    const auto &file = files_[next_file_++];
    CorpusDocument doc;
    doc.id = file.stem().string();
    std::ifstream in(file, std::ios::binary);
    std::ostringstream buffer;
    if (in) buffer << in.rdbuf();
    if (!in || in.bad()) {
      *error = "cannot read document " + file.string();
      return CorpusDocument{};
    }
    doc.text = buffer.str();
    return doc;
  }

  std::string line;
  while (std::getline(stream_, line)) {
    ++line_;
    if (std::all_of(line.begin(), line.end(),
                    [](char c) { return c == ' ' || c == '\r' || c == '\t'; })) {
      continue;
    }
    try {
      json object = json::parse(line);
      CorpusDocument doc;
      doc.id = object.contains("id") ? IdString(object.at("id"))
                                     : std::to_string(line_);
      doc.text = object.at("text").get<std::string>();
      return doc;
    } catch (const std::exception &e) {
      *error = "corpus line " + std::to_string(line_) + ": " + e.what();
      return CorpusDocument{};
    }
  }
  return std::nullopt;
}

}  // namespace conceptlink
