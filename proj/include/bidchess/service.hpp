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
#include <filesystem>
#include <json.hpp>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "bidchess/session.hpp"
#include "bidchess/table.hpp"

namespace httplib {
class Server;
}

namespace bidchess {

/// Environment variable naming the directory `serve` loads tables from.
inline constexpr const char* kTableDirEnv = "BIDCHESS_TABLE_DIR";

/// Read-only collection of tables; a position is answered by the first
/// table covering it (directly or through the colour flip).
class TableSet {
 public:
  void add(std::shared_ptr<const RichmanTable> t) { tables_.push_back(std::move(t)); }
  /// Every *.rtb file in `dir`, in name order.
  static TableSet load_dir(const std::filesystem::path& dir);

  bool empty() const { return tables_.empty(); }
  std::size_t size() const { return tables_.size(); }
  /// Throws LookupError when no table covers `p`.
  const RichmanTable& table_for(const Position& p) const;

 private:
  std::vector<std::shared_ptr<const RichmanTable>> tables_;
};

/// Live sessions. Actions on one session are serialized; different
/// sessions run independently. The engine answers automatically whenever
/// the engine side has to act. Every protocol event is logged as one JSON
/// line.
class SessionManager {
 public:
  explicit SessionManager(std::shared_ptr<const TableSet> tables, std::ostream* log = nullptr,
                          std::size_t ply_cap = 10'000);

  /// Request: {fen, chips_total, human_side, white_chips?}. ParseError on a
  /// malformed request, LookupError when no table covers the position.
  nlohmann::json create(const nlohmann::json& request);
  /// LookupError for unknown ids.
  nlohmann::json get(const std::string& id) const;
  /// {amount}
  nlohmann::json bid(const std::string& id, const nlohmann::json& request);
  /// {choice: "accept" | "reject"}
  nlohmann::json choice(const std::string& id, const nlohmann::json& request);
  /// {from, to, promotion?}
  nlohmann::json move(const std::string& id, const nlohmann::json& request);
  /// Engine advice for the side to act, without acting.
  nlohmann::json advice(const std::string& id) const;

 private:
  struct Slot {
    Slot(GameSession s, const RichmanTable* t) : session(std::move(s)), table(t) {}
    mutable std::mutex mu;
    GameSession session;
    const RichmanTable* table;
    std::size_t logged = 0;
  };

  std::shared_ptr<Slot> find(const std::string& id) const;
  nlohmann::json finish(Slot& slot);
  void log_new_events(Slot& slot);

  std::shared_ptr<const TableSet> tables_;
  std::ostream* log_;
  std::size_t ply_cap_;
  mutable std::mutex mu_;
  std::mutex log_mu_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::size_t next_id_ = 1;
};

/// Installs the /v1 routes. Errors map to 400 (malformed input), 404
/// (unknown session or position outside every table) and 422 (protocol
/// violations); bodies are {"error": {"kind": ..., "message": ...}}.
void mount_routes(httplib::Server& server, std::shared_ptr<const TableSet> tables,
                  std::shared_ptr<SessionManager> sessions);

}  // namespace bidchess
