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

#include "bidchess/table.hpp"

#include "bidchess/error.hpp"

namespace bidchess {

RichmanTable::RichmanTable(std::shared_ptr<const Space> space, std::vector<PieceSet> roots, Columns columns,
                           Provenance prov)
    : space_(std::move(space)), roots_(std::move(roots)), cols_(std::move(columns)), prov_(std::move(prov)) {
  const std::size_t n = space_->size();
  if (cols_.value_id.size() != n || cols_.t_label.size() != n || cols_.t_prime_label.size() != n ||
      cols_.qclass.size() != n) {
    throw IntegrityError("table columns do not match the space size");
  }
  for (std::size_t i = 1; i < cols_.pool.size(); ++i) {
    if (!(cols_.pool[i - 1] < cols_.pool[i])) throw IntegrityError("value pool is not strictly ascending");
  }
  if (!cols_.pool.empty() && (cols_.pool.front() < 0 || cols_.pool.back() > 1)) {
    throw IntegrityError("table value outside [0, 1]");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cols_.value_id[i] >= cols_.pool.size()) throw IntegrityError("value index out of range");
    const Status s = space_->position(i).status();
    if ((s == Status::WhiteWon && value_at(i) != 1) || (s == Status::BlackWon && value_at(i) != 0)) {
      throw IntegrityError("terminal position with a value other than 0 or 1");
    }
  }
}

std::optional<RichmanTable::Entry> RichmanTable::find(const Position& p) const {
  if (p.dims() != space_->dims()) return std::nullopt;
  Entry e;
  if (auto i = space_->index_of(p)) {
    e.index = *i;
    e.value = value_at(*i);
    e.t_label = cols_.t_label[*i];
    e.t_prime_label = cols_.t_prime_label[*i];
    e.qclass = cols_.qclass[*i];
    return e;
  }
  if (auto i = space_->index_of(color_flip(p))) {
    e.index = *i;
    e.flipped = true;
    e.value = 1 - value_at(*i);
    e.t_label = cols_.t_prime_label[*i];
    e.t_prime_label = cols_.t_label[*i];
    e.qclass = cols_.qclass[*i];
    return e;
  }
  return std::nullopt;
}

RichmanTable::Entry RichmanTable::lookup(const Position& p) const {
  if (auto e = find(p)) return *e;
  throw LookupError("position is not covered by the table");
}

bool RichmanTable::operator==(const RichmanTable& o) const {
  return space_->dims() == o.space_->dims() && roots_ == o.roots_ && cols_.pool == o.cols_.pool &&
         cols_.value_id == o.cols_.value_id && cols_.t_label == o.cols_.t_label &&
         cols_.t_prime_label == o.cols_.t_prime_label && cols_.qclass == o.cols_.qclass &&
         prov_.n == o.prov_.n && prov_.violations == o.prov_.violations &&
         prov_.alpha_certified == o.prov_.alpha_certified && prov_.beta_certified == o.prov_.beta_certified &&
         prov_.certified_at == o.prov_.certified_at && prov_.tool_version == o.prov_.tool_version;
}

RichmanTable make_table(std::shared_ptr<const Space> space, std::vector<PieceSet> roots, const SpaceGraph& sg,
                        const RankedValues& x, const Certificate* cert, Provenance prov) {
  if (sg.node_of.size() != space->size() || x.rank.size() != sg.graph.size()) {
    throw UsageError("node values do not match the space");
  }
  RichmanTable::Columns c;
  c.pool = x.pool;
  const std::size_t n = space->size();
  c.value_id.resize(n);
  c.t_label.assign(n, -1);
  c.t_prime_label.assign(n, -1);
  c.qclass.assign(n, QuiescenceClass::None);
  const auto quiet = quiescent_nodes(x, sg.graph);
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId node = sg.node_of[i];
    c.value_id[i] = x.rank[node];
    if (cert) {
      c.t_label[i] = cert->t.label[node];
      c.t_prime_label[i] = cert->t_prime.label[node];
    }
    if (quiet[node]) c.qclass[i] = classify_quiescent(space->position(i));
  }
  return RichmanTable(std::move(space), std::move(roots), std::move(c), std::move(prov));
}

}  // namespace bidchess
