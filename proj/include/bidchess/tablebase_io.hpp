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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "bidchess/table.hpp"
#include "bidchess/thresholds.hpp"

namespace bidchess {

/// Files start with one line of JSON (format, version, dims, piece sets,
/// counts, content, crc32 of the payload) followed by a binary payload of
/// little-endian integers and length-prefixed big-endian magnitudes.
inline constexpr std::string_view kFormatVersion = "1.0";

void write_table(const RichmanTable& t, std::ostream& out);
/// Throws IntegrityError on a bad checksum, a different major version or a
/// truncated payload; ParseError on an unreadable header.
RichmanTable read_table(std::istream& in);
void save_table(const RichmanTable& t, const std::filesystem::path& path);
RichmanTable load_table(const std::filesystem::path& path);

/// Identifies the graph a checkpoint's rows belong to.
struct CheckpointMeta {
  BoardDims dims;
  std::vector<PieceSet> roots;
  /// Rows are per symmetry class (in order of lowest member) when set,
  /// per position otherwise.
  bool symmetric = false;
};

struct Checkpoint {
  CheckpointMeta meta;
  ThresholdVector vector;
};

void write_checkpoint(const ThresholdVector& v, const CheckpointMeta& meta, std::ostream& out);
/// `expect_kind` guards resumes: a mismatch throws UsageError.
Checkpoint read_checkpoint(std::istream& in, std::optional<ThresholdKind> expect_kind = std::nullopt);
void save_checkpoint(const ThresholdVector& v, const CheckpointMeta& meta, const std::filesystem::path& path);
Checkpoint load_checkpoint(const std::filesystem::path& path, std::optional<ThresholdKind> expect_kind = std::nullopt);

/// One line per position in index order: "<fen> <num>/<den>".
void export_text(const RichmanTable& t, std::ostream& out);

}  // namespace bidchess
