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

#include "bidchess/service.hpp"

#include <httplib.h>

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "bidchess/analytics.hpp"
#include "bidchess/engine.hpp"
#include "bidchess/error.hpp"
#include "bidchess/fen.hpp"
#include "bidchess/json_io.hpp"
#include "bidchess/tablebase_io.hpp"

namespace bidchess {

using nlohmann::json;

TableSet TableSet::load_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw LookupError("table directory " + dir.string() + " does not exist");
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".rtb") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  TableSet out;
  for (const auto& f : files) out.add(std::make_shared<const RichmanTable>(load_table(f)));
  return out;
}

const RichmanTable& TableSet::table_for(const Position& p) const {
  for (const auto& t : tables_) {
    if (t->find(p)) return *t;
  }
  throw LookupError("no table covers " + emit_fen(p));
}

namespace {

template <typename T>
T field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field '") + name + "' has the wrong type");
  }
}

Color parse_color(const std::string& s) {
  if (s == "white") return Color::White;
  if (s == "black") return Color::Black;
  throw ParseError("side must be 'white' or 'black'");
}

std::optional<Kind> parse_promotion(const json& j) {
  if (!j.contains("promotion") || j.at("promotion").is_null()) return std::nullopt;
  const std::string s = field<std::string>(j, "promotion");
  if (s == "q" || s == "queen") return Kind::Queen;
  if (s == "n" || s == "knight") return Kind::Knight;
  throw ParseError("promotion must be queen or knight");
}

}  // namespace

SessionManager::SessionManager(std::shared_ptr<const TableSet> tables, std::ostream* log, std::size_t ply_cap)
    : tables_(std::move(tables)), log_(log), ply_cap_(ply_cap) {}

std::shared_ptr<SessionManager::Slot> SessionManager::find(const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw LookupError("no session '" + id + "'");
  return it->second;
}

void SessionManager::log_new_events(Slot& slot) {
  const auto& h = slot.session.history();
  if (!log_) {
    slot.logged = h.size();
    return;
  }
  std::lock_guard lock(log_mu_);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::system_clock::now().time_since_epoch())
                      .count();
  for (; slot.logged < h.size(); ++slot.logged) {
    json line = h[slot.logged];
    line["session"] = slot.session.id();
    line["ts_ms"] = ms;
    *log_ << line.dump() << '\n';
  }
  log_->flush();
}

// Lets the engine act until the human is due or the game is over.
json SessionManager::finish(Slot& slot) {
  GameSession& s = slot.session;
  while (!s.over() && s.actor() == s.engine_side()) {
    apply_action(s, engine_policy(*slot.table, s));
  }
  log_new_events(slot);
  return s.to_json();
}

json SessionManager::create(const json& request) {
  const Position start = parse_fen(field<std::string>(request, "fen"));
  const auto total = field<std::int64_t>(request, "chips_total");
  const Color human = parse_color(field<std::string>(request, "human_side"));
  const std::int64_t white = request.contains("white_chips") ? field<std::int64_t>(request, "white_chips") : total / 2;
  const RichmanTable& table = tables_->table_for(start);
  std::string id;
  {
    std::lock_guard lock(mu_);
    char buf[24];
    std::snprintf(buf, sizeof buf, "s%06zu", next_id_++);
    id = buf;
  }
  GameSession session(id, start, total, white, human, ply_cap_);
  auto slot = std::make_shared<Slot>(std::move(session), &table);
  {
    std::lock_guard lock(mu_);
    sessions_.emplace(id, slot);
  }
  std::lock_guard lock(slot->mu);
  return finish(*slot);
}

json SessionManager::get(const std::string& id) const {
  auto slot = find(id);
  std::lock_guard lock(slot->mu);
  return slot->session.to_json();
}

json SessionManager::bid(const std::string& id, const json& request) {
  auto slot = find(id);
  const auto amount = field<std::int64_t>(request, "amount");
  std::lock_guard lock(slot->mu);
  slot->session.bid(slot->session.human_side(), amount);
  return finish(*slot);
}

json SessionManager::choice(const std::string& id, const json& request) {
  auto slot = find(id);
  const std::string c = field<std::string>(request, "choice");
  if (c != "accept" && c != "reject") throw ParseError("choice must be 'accept' or 'reject'");
  std::lock_guard lock(slot->mu);
  slot->session.choose(slot->session.human_side(), c == "accept");
  return finish(*slot);
}

json SessionManager::move(const std::string& id, const json& request) {
  auto slot = find(id);
  std::lock_guard lock(slot->mu);
  GameSession& s = slot->session;
  const BoardDims& d = s.position().dims();
  const Move m{s.human_side(), Square::parse(field<std::string>(request, "from"), d),
               Square::parse(field<std::string>(request, "to"), d), parse_promotion(request)};
  s.move(s.human_side(), m);
  return finish(*slot);
}

json SessionManager::advice(const std::string& id) const {
  auto slot = find(id);
  std::lock_guard lock(slot->mu);
  const EngineAction a = engine_policy(*slot->table, slot->session);
  json j = {{"side", color_name(slot->session.actor())}, {"rationale", a.rationale}};
  switch (a.type) {
    case EngineAction::Type::Bid: j["bid"] = a.bid; break;
    case EngineAction::Type::Choice: j["choice"] = a.accept ? "accept" : "reject"; break;
    case EngineAction::Type::Move: j["move"] = a.move.uci(); break;
  }
  return j;
}

namespace {

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, std::string_view kind, const std::string& message) {
  send(res, status, {{"error", {{"kind", kind}, {"message", message}}}});
}

// Runs a handler and maps library errors onto HTTP statuses.
template <typename F>
httplib::Server::Handler guarded(F f, int ok_status = 200) {
  return [f, ok_status](const httplib::Request& req, httplib::Response& res) {
    try {
      send(res, ok_status, f(req));
    } catch (const ParseError& e) {
      send_error(res, 400, "parse", e.what());
    } catch (const json::exception& e) {
      send_error(res, 400, "parse", e.what());
    } catch (const LookupError& e) {
      send_error(res, 404, "lookup", e.what());
    } catch (const UsageError& e) {
      send_error(res, 422, "protocol", e.what());
    } catch (const std::exception& e) {
      send_error(res, 500, "internal", e.what());
    }
  };
}

Position fen_param(const httplib::Request& req) {
  if (!req.has_param("fen")) throw ParseError("missing query parameter 'fen'");
  return parse_fen(req.get_param_value("fen"));
}

json body(const httplib::Request& req) { return json::parse(req.body); }

}  // namespace

void mount_routes(httplib::Server& server, std::shared_ptr<const TableSet> tables,
                  std::shared_ptr<SessionManager> sessions) {
  server.Get("/v1/value", guarded([tables](const httplib::Request& req) {
    const Position p = fen_param(req);
    const RichmanTable::Entry e = tables->table_for(p).lookup(p);
    json j = rational_json(e.value);
    j["fen"] = emit_fen(p);
    return j;
  }));
  server.Get("/v1/report", guarded([tables](const httplib::Request& req) {
    const Position p = fen_param(req);
    return report_json(report(tables->table_for(p), p));
  }));
  server.Get("/v1/options", guarded([tables](const httplib::Request& req) {
    const Position p = fen_param(req);
    return options_json(tables->table_for(p), p);
  }));
  server.Post("/v1/session", guarded([sessions](const httplib::Request& req) { return sessions->create(body(req)); }, 201));
  server.Get(R"(/v1/session/([A-Za-z0-9]+))", guarded([sessions](const httplib::Request& req) {
    return sessions->get(req.matches[1]);
  }));
  server.Get(R"(/v1/session/([A-Za-z0-9]+)/advice)", guarded([sessions](const httplib::Request& req) {
    return sessions->advice(req.matches[1]);
  }));
  server.Post(R"(/v1/session/([A-Za-z0-9]+)/bid)", guarded([sessions](const httplib::Request& req) {
    return sessions->bid(req.matches[1], body(req));
  }));
  server.Post(R"(/v1/session/([A-Za-z0-9]+)/choice)", guarded([sessions](const httplib::Request& req) {
    return sessions->choice(req.matches[1], body(req));
  }));
  server.Post(R"(/v1/session/([A-Za-z0-9]+)/move)", guarded([sessions](const httplib::Request& req) {
    return sessions->move(req.matches[1], body(req));
  }));
}

}  // namespace bidchess
