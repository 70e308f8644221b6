// Copyright 2026 The bidchess Authors
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

#include "bidchess/tablebase_io.hpp"

#include <zlib.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "bidchess/error.hpp"
#include "bidchess/fen.hpp"

namespace bidchess {

using nlohmann::json;

namespace {

class Writer {
 public:
  void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
  void big(const BigInt& v) {
    if (v < 0) throw UsageError("negative integer in payload");
    std::size_t count = 0;
    std::string bytes((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8, '\0');
    mpz_export(bytes.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
    bytes.resize(count);
    u32(static_cast<std::uint32_t>(bytes.size()));
    buf_ += bytes;
  }
  const std::string& bytes() const { return buf_; }

 private:
  std::string buf_;
};

class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}
  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(data_[pos_++]);
  }
  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
    return v;
  }
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  BigInt big() {
    const std::uint32_t len = u32();
    need(len);
    BigInt v;
    if (len) mpz_import(v.get_mpz_t(), len, 1, 1, 1, 0, data_.data() + pos_);
    pos_ += len;
    return v;
  }
  bool done() const { return pos_ == data_.size(); }

 private:
  void need(std::size_t n) const {
    if (data_.size() - pos_ < n) throw IntegrityError("payload is truncated");
  }
  std::string_view data_;
  std::size_t pos_ = 0;
};

std::uint32_t checksum(std::string_view bytes) {
  uLong c = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed in chunks
  std::size_t off = 0;
  while (off < bytes.size()) {
    const std::size_t len = std::min<std::size_t>(bytes.size() - off, 1u << 30);
    c = crc32(c, reinterpret_cast<const Bytef*>(bytes.data() + off), static_cast<uInt>(len));
    off += len;
  }
  return static_cast<std::uint32_t>(c);
}

json set_ids(const std::vector<PieceSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s.id());
  return out;
}

std::vector<PieceSet> parse_sets(const json& j) {
  std::vector<PieceSet> out;
  for (const auto& s : j) out.push_back(PieceSet::parse(s.get<std::string>()));
  return out;
}

void write_file(std::ostream& out, json header, const std::string& payload) {
  header["payload_bytes"] = payload.size();
  header["crc32"] = checksum(payload);
  out << header.dump() << '\n';
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) throw Error("write failed");
}

// Reads header and payload; the format version and checksum must match.
std::pair<json, std::string> read_file(std::istream& in, std::string_view format) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing header line");
  json header;
  try {
    header = json::parse(line);
    if (header.at("format").get<std::string>() != format) {
      throw ParseError("expected a " + std::string(format) + " file");
    }
    const std::string version = header.at("version").get<std::string>();
    if (version.substr(0, version.find('.')) != kFormatVersion.substr(0, kFormatVersion.find('.'))) {
      throw IntegrityError("unsupported format version " + version);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad header: ") + e.what());
  }
  std::string payload(header.value("payload_bytes", std::size_t{0}), '\0');
  in.read(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (static_cast<std::size_t>(in.gcount()) != payload.size()) throw IntegrityError("payload is truncated");
  if (checksum(payload) != header.value("crc32", std::uint32_t{0})) throw IntegrityError("checksum mismatch");
  return {std::move(header), std::move(payload)};
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LookupError("cannot open " + path.string());
  return in;
}

}  // namespace

void write_table(const RichmanTable& t, std::ostream& out) {
  const auto& c = t.columns();
  Writer w;
  w.u32(static_cast<std::uint32_t>(c.pool.size()));
  for (const Rational& q : c.pool) {
    w.big(q.get_num());
    w.big(q.get_den());
  }
  w.u32(static_cast<std::uint32_t>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) {
    w.u32(c.value_id[i]);
    w.i32(c.t_label[i]);
    w.i32(c.t_prime_label[i]);
    w.u8(static_cast<std::uint8_t>(c.qclass[i]));
  }
  const Provenance& p = t.provenance();
  json header = {
      {"format", "bidchess-table"},
      {"version", kFormatVersion},
      {"dims", t.space().dims().to_string()},
      {"piece_sets", set_ids(t.roots())},
      {"closure", set_ids(t.space().piece_sets())},
      {"positions", t.size()},
      {"distinct_values", c.pool.size()},
      {"content", "certified"},
      {"n", p.n},
      {"violations", p.violations},
      {"alpha_certified", p.alpha_certified},
      {"beta_certified", p.beta_certified},
      {"certified_at", p.certified_at},
      {"tool_version", p.tool_version},
  };
  write_file(out, std::move(header), w.bytes());
}

RichmanTable read_table(std::istream& in) {
  auto [header, payload] = read_file(in, "bidchess-table");
  Provenance p;
  std::shared_ptr<const Space> space;
  std::vector<PieceSet> roots;
  try {
    p.n = header.at("n").get<std::size_t>();
    p.violations = header.at("violations").get<std::size_t>();
    p.alpha_certified = header.at("alpha_certified").get<bool>();
    p.beta_certified = header.at("beta_certified").get<bool>();
    p.certified_at = header.at("certified_at").get<std::string>();
    p.tool_version = header.at("tool_version").get<std::string>();
    roots = parse_sets(header.at("piece_sets"));
    space = std::make_shared<const Space>(BoardDims::parse(header.at("dims").get<std::string>()), roots);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad table header: ") + e.what());
  }
  Reader r(payload);
  RichmanTable::Columns c;
  c.pool.resize(r.u32());
  for (Rational& q : c.pool) {
    q.get_num() = r.big();
    q.get_den() = r.big();
    if (q.get_den() == 0) throw IntegrityError("zero denominator in table");
    q.canonicalize();
  }
  const std::uint32_t n = r.u32();
  if (n != space->size()) throw IntegrityError("table size does not match its space");
  c.value_id.resize(n);
  c.t_label.resize(n);
  c.t_prime_label.resize(n);
  c.qclass.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    c.value_id[i] = r.u32();
    c.t_label[i] = r.i32();
    c.t_prime_label[i] = r.i32();
    const std::uint8_t cls = r.u8();
    if (cls > static_cast<std::uint8_t>(QuiescenceClass::Other)) throw IntegrityError("bad quiescence class");
    c.qclass[i] = static_cast<QuiescenceClass>(cls);
  }
  if (!r.done()) throw IntegrityError("trailing bytes in payload");
  return RichmanTable(std::move(space), std::move(roots), std::move(c), std::move(p));
}

void save_table(const RichmanTable& t, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_table(t, out);
}

RichmanTable load_table(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_table(in);
}

void write_checkpoint(const ThresholdVector& v, const CheckpointMeta& meta, std::ostream& out) {
  Writer w;
  w.u32(static_cast<std::uint32_t>(v.size()));
  for (NodeId i = 0; i < v.size(); ++i) w.big(v.numerator(i));
  json header = {
      {"format", "bidchess-checkpoint"},
      {"version", kFormatVersion},
      {"dims", meta.dims.to_string()},
      {"piece_sets", set_ids(meta.roots)},
      {"symmetric", meta.symmetric},
      {"kind", kind_name(v.kind())},
      {"n", v.n()},
      {"rows", v.size()},
  };
  write_file(out, std::move(header), w.bytes());
}

Checkpoint read_checkpoint(std::istream& in, std::optional<ThresholdKind> expect_kind) {
  auto [header, payload] = read_file(in, "bidchess-checkpoint");
  Checkpoint cp;
  ThresholdKind kind;
  std::size_t n = 0;
  try {
    cp.meta.dims = BoardDims::parse(header.at("dims").get<std::string>());
    cp.meta.roots = parse_sets(header.at("piece_sets"));
    cp.meta.symmetric = header.at("symmetric").get<bool>();
    kind = parse_kind(header.at("kind").get<std::string>());
    n = header.at("n").get<std::size_t>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad checkpoint header: ") + e.what());
  }
  if (expect_kind && *expect_kind != kind) {
    throw UsageError("checkpoint holds " + std::string(kind_name(kind)) + " thresholds, expected " +
                     std::string(kind_name(*expect_kind)));
  }
  Reader r(payload);
  const std::uint32_t rows = r.u32();
  cp.vector = ThresholdVector(kind, rows, n);
  cp.vector.set_n(n);
  for (NodeId i = 0; i < rows; ++i) {
    try {
      cp.vector.set_numerator(i, r.big());
    } catch (const UsageError&) {
      throw IntegrityError("checkpoint numerator out of range");
    }
  }
  if (!r.done()) throw IntegrityError("trailing bytes in payload");
  return cp;
}

void save_checkpoint(const ThresholdVector& v, const CheckpointMeta& meta, const std::filesystem::path& path) {
  // write to a sibling and rename so an interrupted save never clobbers the
  // previous checkpoint
  std::filesystem::path tmp = path;
  tmp += ".partial";
  {
    auto out = open_out(tmp);
    write_checkpoint(v, meta, out);
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::filesystem::path& path, std::optional<ThresholdKind> expect_kind) {
  auto in = open_in(path);
  return read_checkpoint(in, expect_kind);
}

void export_text(const RichmanTable& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << emit_fen(t.space().position(i)) << ' ' << to_string(t.value_at(i)) << '\n';
  }
}

}  // namespace bidchess
