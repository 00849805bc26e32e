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


// Binary CDB container.
//
//   "CDB1" u32 version u32 max_name_words u32 dim
//   u32 #names    { u8 abbrev, str display, u32 #tokens { str token } }
//   u32 #concepts { str cui, str semantic_type, u64 train_count,
//                   u32 preferred_name, u32 #names { u32 name_id },
//                   u8 has_long [f32 x dim], u8 has_short [f32 x dim] }
//   u8 cooc_mode u64 #pairs { str a, str b, u64 count }
//   "END1"
//
// Integers are little-endian, str is u32 length + bytes.

#include <bit>
#include <fstream>
#include <sstream>

#include "conceptlink/cdb.h"
#include "conceptlink/error.h"

namespace conceptlink {

namespace {

constexpr char kMagic[4] = {'C', 'D', 'B', '1'};
constexpr char kTrailer[4] = {'E', 'N', 'D', '1'};
constexpr uint32_t kVersion = 1;

class Writer {
 public:
  explicit Writer(std::ostream &out) : out_(out) {}

  void Bytes(const char *data, size_t n) { out_.write(data, n); }
  void U8(uint8_t v) { out_.put(static_cast<char>(v)); }
  void U32(uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    Bytes(b, 4);
  }
  void U64(uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    Bytes(b, 8);
  }
  void F32(float v) { U32(std::bit_cast<uint32_t>(v)); }
  void Str(std::string_view s) {
    U32(static_cast<uint32_t>(s.size()));
    Bytes(s.data(), s.size());
  }

 private:
  std::ostream &out_;
};

class Reader {
 public:
  explicit Reader(std::istream &in) : in_(in) {}

  void Bytes(char *data, size_t n) {
    in_.read(data, n);
    if (static_cast<size_t>(in_.gcount()) != n) {
      throw ParseError("CDB file is truncated");
    }
  }
  uint8_t U8() {
    char b;
    Bytes(&b, 1);
    return static_cast<uint8_t>(b);
  }
  uint32_t U32() {
    unsigned char b[4];
    Bytes(reinterpret_cast<char *>(b), 4);
    uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  }
  uint64_t U64() {
    unsigned char b[8];
    Bytes(reinterpret_cast<char *>(b), 8);
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  }
  float F32() { return std::bit_cast<float>(U32()); }
  std::string Str() {
    uint32_t n = U32();
    if (n > (1u << 24)) throw ParseError("CDB file is corrupt: string too long");
    std::string s(n, '\0');
    Bytes(s.data(), n);
    return s;
  }

 private:
  std::istream &in_;
};

}  // namespace

void ConceptDatabase::Save(std::ostream &out) const {
  Writer w(out);
  w.Bytes(kMagic, 4);
  w.U32(kVersion);
  w.U32(static_cast<uint32_t>(options_.max_name_words));
  w.U32(static_cast<uint32_t>(dim_));

  w.U32(static_cast<uint32_t>(names_.size()));
  for (const NameKey &key : names_) {
    w.U8(key.is_abbreviation ? 1 : 0);
    w.Str(key.display);
    w.U32(static_cast<uint32_t>(key.tokens.size()));
    for (const std::string &token : key.tokens) w.Str(token);
  }

  w.U32(static_cast<uint32_t>(concepts_.size()));
  for (const ConceptRecord &record : concepts_) {
    w.Str(record.cui);
    w.Str(record.semantic_type);
    w.U64(record.train_count);
    w.U32(record.preferred_name);
    w.U32(static_cast<uint32_t>(record.names.size()));
    for (NameId id : record.names) w.U32(id);
    for (const auto *v : {&record.embedding_long, &record.embedding_short}) {
      w.U8(v->empty() ? 0 : 1);
      for (float x : *v) w.F32(x);
    }
  }

  w.U8(static_cast<uint8_t>(cooc_.mode()));
  w.U64(cooc_.counts().size());
  for (const auto &[pair, count] : cooc_.counts()) {
    w.Str(pair.first);
    w.Str(pair.second);
    w.U64(count);
  }
  w.Bytes(kTrailer, 4);
  if (!out) throw IoError("failed to write concept database");
}

ConceptDatabase ConceptDatabase::Load(std::istream &in) {
  Reader r(in);
  char magic[4];
  r.Bytes(magic, 4);
  if (!std::equal(magic, magic + 4, kMagic)) {
    throw ParseError("not a CDB file (bad magic)");
  }
  uint32_t version = r.U32();
  if (version != kVersion) {
    throw ParseError("unsupported CDB version " + std::to_string(version));
  }
  CdbOptions options;
  options.max_name_words = static_cast<int>(r.U32());
  if (options.max_name_words < 1) throw ParseError("CDB file is corrupt");
  ConceptDatabase cdb(options);
  const int dim = static_cast<int>(r.U32());

  uint32_t num_names = r.U32();
  for (uint32_t i = 0; i < num_names; ++i) {
    PreparedName prepared;
    prepared.is_abbreviation = r.U8() != 0;
    prepared.display = r.Str();
    uint32_t num_tokens = r.U32();
    if (num_tokens == 0 || num_tokens > 1024) {
      throw ParseError("CDB file is corrupt: bad name length");
    }
    for (uint32_t t = 0; t < num_tokens; ++t) prepared.tokens.push_back(r.Str());
    if (cdb.InsertName(prepared) != i) {
      throw ParseError("CDB file is corrupt: duplicate name");
    }
  }

  uint32_t num_concepts = r.U32();
  for (uint32_t c = 0; c < num_concepts; ++c) {
    std::string cui = r.Str();
    if (cdb.FindConcept(cui)) throw ParseError("CDB file is corrupt: duplicate cui");
    ConceptId id = cdb.GetOrCreateConcept(cui);
    ConceptRecord &record = cdb.concepts_[id];
    record.semantic_type = r.Str();
    record.train_count = r.U64();
    NameId preferred = r.U32();
    uint32_t n = r.U32();
    if (n > num_names) throw ParseError("CDB file is corrupt: bad name count");
    for (uint32_t k = 0; k < n; ++k) {
      NameId name_id = r.U32();
      if (name_id >= num_names) throw ParseError("CDB file is corrupt: bad name id");
      cdb.LinkName(id, name_id);
    }
    if (n > 0) cdb.SetPreferredName(id, preferred);
    for (auto *v : {&record.embedding_long, &record.embedding_short}) {
      if (r.U8() == 0) continue;
      if (dim <= 0) throw ParseError("CDB file is corrupt: embedding without dim");
      v->resize(dim);
      for (float &x : *v) x = r.F32();
    }
  }
  cdb.dim_ = dim;

  uint8_t mode = r.U8();
  if (mode > 1) throw ParseError("CDB file is corrupt: bad co-occurrence mode");
  cdb.cooc_.set_mode(static_cast<CoocMode>(mode));
  uint64_t pairs = r.U64();
  for (uint64_t p = 0; p < pairs; ++p) {
    std::string a = r.Str();
    std::string b = r.Str();
    cdb.cooc_.Add(a, b, r.U64());
  }

  char trailer[4];
  r.Bytes(trailer, 4);
  if (!std::equal(trailer, trailer + 4, kTrailer)) {
    throw ParseError("CDB file is corrupt: missing trailer");
  }
  return cdb;
}

void ConceptDatabase::SaveFile(const std::string &path) const {
  // Serialize fully before touching the destination.
  std::ostringstream buffer(std::ios::binary);
  Save(buffer);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write concept database: " + path);
  const std::string bytes = buffer.str();
  out.write(bytes.data(), bytes.size());
  if (!out) throw IoError("failed writing concept database: " + path);
}

ConceptDatabase ConceptDatabase::LoadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open concept database: " + path);
  return Load(in);
}

}  // namespace conceptlink
