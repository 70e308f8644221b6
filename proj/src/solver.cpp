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

#include "bidchess/solver.hpp"

#include <chrono>
#include <ctime>
#include <map>

#include "bidchess/error.hpp"
#include "bidchess/tablebase_io.hpp"
#include "bidchess/version.hpp"

namespace bidchess {

using nlohmann::json;

Problem::Problem(BoardDims dims, std::vector<PieceSet> roots, bool symmetry)
    : roots_(std::move(roots)), space_(std::make_shared<const Space>(dims, roots_)),
      graph_(build_space_graph(*space_, symmetry)) {}

std::vector<PieceSet> default_roots() {
  std::vector<PieceSet> out;
  for (const char* id : {"KBk", "KNk", "KPk", "KQk", "KRk"}) out.push_back(PieceSet::parse(id));
  return out;
}

std::vector<PieceSet> parse_roots(std::string_view text) {
  if (text == "all") return default_roots();
  std::vector<PieceSet> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (part.empty()) throw ParseError("empty piece set in '" + std::string(text) + "'");
    out.push_back(PieceSet::parse(part));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Thresholds init_both(const Problem& problem, std::size_t capacity_n) {
  return {init_thresholds(ThresholdKind::Alpha, problem.graph().graph, capacity_n),
          init_thresholds(ThresholdKind::Beta, problem.graph().graph, capacity_n)};
}

namespace {

CheckpointMeta meta_of(const Problem& problem) {
  return {problem.space().dims(), problem.roots(), problem.graph().symmetric};
}

std::filesystem::path checkpoint_path(const std::filesystem::path& dir, ThresholdKind k) {
  return dir / (std::string(kind_name(k)) + ".ckpt");
}

}  // namespace

void advance(Thresholds& t, const Problem& problem, std::size_t n_target, const IterateOptions& opts) {
  for (ThresholdVector* v : {&t.alpha, &t.beta}) {
    RunOptions run;
    run.n_target = n_target;
    run.threads = opts.threads;
    run.check_monotone = opts.check_monotone;
    run.checkpoint_every = opts.checkpoint_every;
    if (opts.checkpoint_dir || opts.progress) {
      run.on_checkpoint = [&](const ThresholdVector& cur) {
        if (opts.checkpoint_dir) save_checkpoint(cur, meta_of(problem), checkpoint_path(*opts.checkpoint_dir, cur.kind()));
        if (opts.progress) opts.progress(cur);
      };
    }
    run_to(*v, problem.graph().graph, run);
  }
}

Thresholds resume(const Problem& problem, const std::filesystem::path& dir) {
  auto a = load_checkpoint(checkpoint_path(dir, ThresholdKind::Alpha), ThresholdKind::Alpha);
  auto b = load_checkpoint(checkpoint_path(dir, ThresholdKind::Beta), ThresholdKind::Beta);
  for (const Checkpoint* cp : {&a, &b}) {
    if (cp->meta.dims != problem.space().dims() || cp->meta.roots != problem.roots() ||
        cp->meta.symmetric != problem.graph().symmetric || cp->vector.size() != problem.graph().graph.size()) {
      throw UsageError("checkpoint does not belong to this board, piece set and symmetry setting");
    }
  }
  if (a.vector.n() != b.vector.n()) throw UsageError("alpha and beta checkpoints disagree in n");
  return {std::move(a.vector), std::move(b.vector)};
}

CertifyOutcome certify_thresholds(const Problem& problem, const Thresholds& t, const ViolationOptions& opts) {
  CertifyOutcome out;
  out.candidate = build_candidate(t.alpha, t.beta, problem.graph().graph);
  out.violations = check_candidate(out.candidate, problem.space(), problem.graph(), opts);
  out.ranked = rank_values(out.candidate.values);
  if (out.violations.count != 0) return out;
  const GameGraph& g = problem.graph().graph;
  out.certificate = certify(out.ranked, g);
  out.labels_sound = labels_sound(out.certificate->t, out.ranked, g) && labels_sound(out.certificate->t_prime, out.ranked, g);
  out.quiescent = quiescent_positions(out.ranked, problem.space(), problem.graph(), &*out.certificate);
  out.quiescence_sufficient = quiescence_sufficiency_check(out.ranked, g, out.certificate->t);
  return out;
}

namespace {

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

RichmanTable to_table(const Problem& problem, const CertifyOutcome& outcome) {
  if (!outcome.certified()) throw UsageError("refusing to build a table from an uncertified candidate");
  Provenance prov;
  prov.n = outcome.candidate.n;
  prov.violations = outcome.violations.count;
  prov.alpha_certified = outcome.certificate->alpha_equals_x;
  prov.beta_certified = outcome.certificate->beta_equals_x;
  prov.certified_at = utc_now();
  prov.tool_version = kToolVersion;
  return make_table(problem.shared_space(), problem.roots(), problem.graph(), outcome.ranked, &*outcome.certificate,
                    std::move(prov));
}

json certification_report(const Problem& problem, const CertifyOutcome& outcome) {
  const Space& space = problem.space();
  const SpaceGraph& sg = problem.graph();
  json report = {
      {"dims", space.dims().to_string()},
      {"n", outcome.candidate.n},
      {"positions", space.size()},
      {"nodes", sg.graph.size()},
      {"violations", outcome.violations.count},
      {"certified", outcome.certified()},
  };
  if (!outcome.certificate) return report;
  const Certificate& cert = *outcome.certificate;
  json sets = json::array();
  for (const SpaceBlock& b : space.blocks()) {
    std::size_t miss_t = 0, miss_tp = 0;
    std::map<std::int32_t, std::size_t> hist_t, hist_tp;
    for (std::size_t i = b.begin; i < b.end(); ++i) {
      const NodeId n = sg.node_of[i];
      const Rational& x = outcome.ranked.pool[outcome.ranked.rank[n]];
      ++hist_t[cert.t.label[n]];
      ++hist_tp[cert.t_prime.label[n]];
      miss_t += cert.t.label[n] < 0 && x > 0;
      miss_tp += cert.t_prime.label[n] < 0 && x < 1;
    }
    auto as_json = [](const std::map<std::int32_t, std::size_t>& h) {
      json j = json::object();
      for (auto [k, v] : h) j[std::to_string(k)] = v;
      return j;
    };
    sets.push_back({{"piece_set", b.set.id()},
                    {"alpha_equals_x", miss_t == 0},
                    {"beta_equals_x", miss_tp == 0},
                    {"t_labels", as_json(hist_t)},
                    {"t_prime_labels", as_json(hist_tp)}});
  }
  report["piece_sets"] = sets;
  report["alpha_equals_x"] = cert.alpha_equals_x;
  report["beta_equals_x"] = cert.beta_equals_x;
  report["max_t_label"] = cert.t.max_label;
  report["max_t_prime_label"] = cert.t_prime.max_label;
  report["labels_sound"] = outcome.labels_sound;
  report["quiescence_sufficient"] = outcome.quiescence_sufficient;

  struct ClassStats {
    std::size_t count = 0;
    std::int32_t max_t = -1, max_tp = -1;
    bool unlabeled = false;
  };
  std::map<std::string, ClassStats> classes;
  for (const QuiescenceRecord& r : outcome.quiescent) {
    ClassStats& s = classes[std::string(class_name(r.cls))];
    ++s.count;
    s.max_t = std::max(s.max_t, r.t_label);
    s.max_tp = std::max(s.max_tp, r.t_prime_label);
    s.unlabeled |= r.t_label < 0 || r.t_prime_label < 0;
  }
  json census = json::object();
  for (const auto& [name, s] : classes) {
    census[name] = {{"count", s.count}, {"max_t_label", s.max_t}, {"max_t_prime_label", s.max_tp}, {"unlabeled", s.unlabeled}};
  }
  report["quiescent"] = census;
  return report;
}

CertifyOutcome solve(const Problem& problem, std::size_t n, const IterateOptions& opts) {
  Thresholds t = init_both(problem, n);
  advance(t, problem, n, opts);
  return certify_thresholds(problem, t);
}

}  // namespace bidchess
