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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bidchess/certification.hpp"
#include "bidchess/rational.hpp"
#include "bidchess/space.hpp"

namespace bidchess {

/// Where a table's values came from.
struct Provenance {
  /// Iteration the values were read off (s_n).
  std::size_t n = 0;
  std::size_t violations = 0;
  bool alpha_certified = false;
  bool beta_certified = false;
  /// UTC, ISO 8601, when the certificate was produced.
  std::string certified_at;
  std::string tool_version;
};

/// Exact values of every position of a closed space plus the certificate
/// data: T and T' labels (-1 when absent) and the quiescence class.
///
/// Values are stored once in ascending order; each position holds the index
/// of its value, so comparing two indices compares the values.
class RichmanTable {
 public:
  struct Columns {
    std::vector<Rational> pool;
    std::vector<std::uint32_t> value_id;
    std::vector<std::int32_t> t_label;
    std::vector<std::int32_t> t_prime_label;
    std::vector<QuiescenceClass> qclass;
  };

  /// Throws IntegrityError when the columns do not fit the space or the
  /// values break the table invariants.
  RichmanTable(std::shared_ptr<const Space> space, std::vector<PieceSet> roots, Columns columns, Provenance prov);

  const Space& space() const { return *space_; }
  std::shared_ptr<const Space> shared_space() const { return space_; }
  const std::vector<PieceSet>& roots() const { return roots_; }
  const Provenance& provenance() const { return prov_; }
  const Columns& columns() const { return cols_; }
  std::size_t size() const { return cols_.value_id.size(); }

  const Rational& value_at(std::size_t i) const { return cols_.pool[cols_.value_id[i]]; }

  /// One position seen from White. `flipped` entries were answered through
  /// the colour-flipped position: value 1 - x, and the roles of T and T'
  /// exchanged.
  struct Entry {
    std::size_t index = 0;
    bool flipped = false;
    Rational value;
    std::int32_t t_label = -1;
    std::int32_t t_prime_label = -1;
    QuiescenceClass qclass = QuiescenceClass::None;
  };

  std::optional<Entry> find(const Position& p) const;
  /// Throws LookupError when neither `p` nor its colour flip is covered.
  Entry lookup(const Position& p) const;
  Rational value(const Position& p) const { return lookup(p).value; }

  bool operator==(const RichmanTable& o) const;

 private:
  std::shared_ptr<const Space> space_;
  std::vector<PieceSet> roots_;
  Columns cols_;
  Provenance prov_;
};

/// Expands node-level results (possibly over a symmetry quotient) into a
/// per-position table.
RichmanTable make_table(std::shared_ptr<const Space> space, std::vector<PieceSet> roots, const SpaceGraph& sg,
                        const RankedValues& x, const Certificate* cert, Provenance prov);

}  // namespace bidchess
