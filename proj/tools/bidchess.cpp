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

// Command line front end for the solver and the table service.

#include <httplib.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "bidchess/analytics.hpp"
#include "bidchess/error.hpp"
#include "bidchess/fen.hpp"
#include "bidchess/json_io.hpp"
#include "bidchess/service.hpp"
#include "bidchess/solver.hpp"
#include "bidchess/tablebase_io.hpp"
#include "bidchess/version.hpp"

using namespace bidchess;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNotCertified = 1, kUsage = 2, kLookup = 3, kIntegrity = 4, kFailure = 5 };

struct SpaceArgs {
  std::string board = "8x8";
  std::string pieces = "all";
  bool symmetry = true;
  unsigned threads = 1;

  void add(CLI::App* app) {
    app->add_option("--board", board, "board as FILESxRANKS")->capture_default_str();
    app->add_option("--pieces", pieces, "piece set ids, comma separated, or 'all'")->capture_default_str();
    app->add_flag("--symmetry,!--no-symmetry", symmetry, "share nodes between symmetric positions")->capture_default_str();
    app->add_option("--threads", threads, "worker threads for the iteration")->capture_default_str();
  }

  Problem problem() const { return Problem(BoardDims::parse(board), parse_roots(pieces), symmetry); }
};

void print_progress(const ThresholdVector& v) {
  std::cerr << kind_name(v.kind()) << " n=" << v.n() << '\n';
}

std::string approx(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", q.get_d());
  return buf;
}

int cmd_solve(const SpaceArgs& sa, const std::string& kind, std::size_t n, const std::string& checkpoint,
              bool resume_run, std::size_t every) {
  const Problem problem = sa.problem();
  std::cerr << "positions " << problem.space().size() << ", nodes " << problem.graph().graph.size() << '\n';
  IterateOptions opts;
  opts.threads = sa.threads;
  opts.checkpoint_every = every;
  opts.progress = print_progress;
  if (!checkpoint.empty()) {
    std::filesystem::create_directories(checkpoint);
    opts.checkpoint_dir = checkpoint;
  }
  if (kind == "both") {
    Thresholds t = resume_run ? resume(problem, checkpoint) : init_both(problem, n);
    advance(t, problem, n, opts);
    const Rational g = gap(t.alpha, t.beta);
    std::cout << "n " << t.n() << "\ngap " << approx(g) << '\n';
    return kOk;
  }
  const ThresholdKind k = parse_kind(kind);
  ThresholdVector v = init_thresholds(k, problem.graph().graph, n);
  if (resume_run) {
    v = load_checkpoint(std::filesystem::path(checkpoint) / (kind + ".ckpt"), k).vector;
  }
  RunOptions run;
  run.n_target = n;
  run.threads = sa.threads;
  run.checkpoint_every = every;
  run.check_monotone = true;
  run.on_checkpoint = [&](const ThresholdVector& cur) {
    if (!checkpoint.empty()) {
      save_checkpoint(cur, {problem.space().dims(), problem.roots(), problem.graph().symmetric},
                      std::filesystem::path(checkpoint) / (kind + ".ckpt"));
    }
    print_progress(cur);
  };
  run_to(v, problem.graph().graph, run);
  std::cout << "n " << v.n() << '\n';
  return kOk;
}

int cmd_certify(const SpaceArgs& sa, std::size_t n, const std::string& out, const std::string& report_path,
                const std::string& resume_dir, std::size_t witnesses) {
  const Problem problem = sa.problem();
  IterateOptions opts;
  opts.threads = sa.threads;
  opts.progress = print_progress;
  Thresholds t = resume_dir.empty() ? init_both(problem, n) : resume(problem, resume_dir);
  advance(t, problem, n, opts);
  const CertifyOutcome c = certify_thresholds(problem, t);
  const json rep = certification_report(problem, c);
  if (!report_path.empty()) std::ofstream(report_path) << rep.dump(2) << '\n';
  std::cout << "n " << n << "\nviolations " << c.violations.count << '\n';
  if (!c.certified()) {
    std::cout << "not certified\n";
    std::size_t shown = 0;
    for (std::size_t i : c.violations.positions) {
      if (shown++ == witnesses) {
        std::cout << "... " << c.violations.count - witnesses << " more\n";
        break;
      }
      const Position& p = problem.space().position(i);
      std::cout << emit_fen(p);
      if (p.ongoing()) std::cout << " residual " << to_string(residual(c.candidate, problem.space(), problem.graph(), p));
      std::cout << '\n';
    }
    if (c.certificate) {
      for (NodeId node : c.certificate->t.uncovered) {
        std::cout << "outside T: " << emit_fen(problem.space().position(problem.graph().representative[node])) << '\n';
      }
      for (NodeId node : c.certificate->t_prime.uncovered) {
        std::cout << "outside T': " << emit_fen(problem.space().position(problem.graph().representative[node])) << '\n';
      }
    }
    return kNotCertified;
  }
  std::cout << "certified: alpha = beta = s_" << n << '\n';
  std::cout << "max T label " << c.certificate->t.max_label << ", max T' label " << c.certificate->t_prime.max_label << '\n';
  if (rep.contains("quiescent")) std::cout << "quiescent " << rep["quiescent"].dump() << '\n';
  if (!out.empty()) {
    save_table(to_table(problem, c), out);
    std::cout << "wrote " << out << '\n';
  }
  return kOk;
}

int cmd_value(const std::string& table, const std::string& fen) {
  const RichmanTable t = load_table(table);
  const Rational v = t.value(parse_fen(fen));
  std::cout << to_string(v) << '\n';
  return kOk;
}

int cmd_best_moves(const std::string& table, const std::string& fen) {
  const RichmanTable t = load_table(table);
  const PositionReport r = report(t, parse_fen(fen));
  for (const auto& m : r.best_white) std::cout << "white " << m.text << ' ' << to_string(m.value) << '\n';
  for (const auto& m : r.best_black) std::cout << "black " << m.text << ' ' << to_string(m.value) << '\n';
  return kOk;
}

int cmd_report(const std::string& table, const std::string& fen, bool as_json) {
  const RichmanTable t = load_table(table);
  const PositionReport r = report(t, parse_fen(fen));
  if (as_json) {
    std::cout << report_json(r).dump(2) << '\n';
    return kOk;
  }
  std::cout << "value " << to_string(r.value) << " (" << approx(r.value) << ")\n"
            << "class " << class_name(r.cls) << '\n'
            << "richman bid (white) " << to_string(r.richman_bid_white) << '\n';
  for (const auto& m : r.best_white) std::cout << "best white " << m.text << ' ' << to_string(m.value) << '\n';
  for (const auto& m : r.best_black) std::cout << "best black " << m.text << ' ' << to_string(m.value) << '\n';
  return kOk;
}

int cmd_export(const std::string& table, const std::string& out) {
  const RichmanTable t = load_table(table);
  if (out.empty() || out == "-") {
    export_text(t, std::cout);
  } else {
    std::ofstream f(out);
    export_text(t, f);
  }
  return kOk;
}

int cmd_census(const std::string& table, const std::string& set, unsigned long bound) {
  const RichmanTable t = load_table(table);
  const DenominatorCensus c = denominator_census(t, PieceSet::parse(set), bound);
  std::cout << "piece set " << c.piece_set << "\ndistinct denominators " << c.denominators.size() << "\nmax "
            << c.max_denominator.get_str() << "\nfactors";
  for (const auto& [p, k] : c.max_factors.factors) std::cout << ' ' << p.get_str() << (k > 1 ? "^" + std::to_string(k) : "");
  std::cout << "\ncofactor " << c.max_factors.cofactor.get_str() << '\n';
  return kOk;
}

int cmd_zugzwang(const std::string& table, std::size_t limit) {
  const RichmanTable t = load_table(table);
  const auto z = zugzwang_census(t);
  std::cout << "zugzwang positions " << z.size() << '\n';
  for (std::size_t k = 0; k < z.size() && k < limit; ++k) {
    std::cout << emit_fen(t.space().position(z[k])) << ' ' << to_string(t.value_at(z[k])) << '\n';
  }
  return kOk;
}

int cmd_simulate(const std::string& table, const std::string& fen, std::size_t trials, std::size_t horizon,
                 std::uint64_t seed) {
  const RichmanTable t = load_table(table);
  const Position p = parse_fen(fen);
  const SimulationResult r = random_turn_simulate(t, p, trials, horizon, seed);
  std::cout << "white " << r.white_wins << "\nblack " << r.black_wins << "\nunresolved " << r.unresolved << "\nvalue "
            << to_string(t.value(p)) << '\n';
  return kOk;
}

int cmd_trace(const std::string& table, const std::string& fen, const std::string& coins) {
  const RichmanTable t = load_table(table);
  std::cout << trace_json(forced_sequence_trace(t, parse_fen(fen), coins)).dump(2) << '\n';
  return kOk;
}

int cmd_serve(std::string dir, const std::string& host, int port, const std::string& log_path) {
  if (dir.empty()) {
    const char* env = std::getenv(kTableDirEnv);
    if (!env) throw UsageError(std::string("no --tables given and ") + kTableDirEnv + " is not set");
    dir = env;
  }
  auto tables = std::make_shared<const TableSet>(TableSet::load_dir(dir));
  if (tables->empty()) throw LookupError("no .rtb tables in " + dir);
  std::ofstream log_file;
  std::ostream* log = &std::cerr;
  if (!log_path.empty()) {
    log_file.open(log_path, std::ios::app);
    log = &log_file;
  }
  auto sessions = std::make_shared<SessionManager>(tables, log);
  httplib::Server server;
  mount_routes(server, tables, sessions);
  std::cerr << "serving " << tables->size() << " table(s) on " << host << ':' << port << '\n';
  if (!server.listen(host, port)) throw Error("cannot listen on " + host + ":" + std::to_string(port));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Richman values for three-piece bidding chess positions"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  SpaceArgs sa;
  std::size_t n = 0;
  std::size_t every = 100;
  std::string kind = "both", checkpoint, out, report_path, resume_dir, table, fen, set, coins = "W*";
  bool resume_run = false, as_json = false;

  auto* solve = app.add_subcommand("solve", "iterate alpha_n and beta_n over a closure");
  sa.add(solve);
  solve->add_option("--kind", kind, "alpha, beta or both")->capture_default_str();
  solve->add_option("--n", n, "target iteration")->required();
  solve->add_option("--checkpoint", checkpoint, "checkpoint directory");
  solve->add_option("--checkpoint-every", every, "iterations between checkpoints")->capture_default_str();
  solve->add_flag("--resume", resume_run, "continue from the checkpoint directory");

  auto* certify = app.add_subcommand("certify", "build s_n, check it and certify it with T and T'");
  sa.add(certify);
  certify->add_option("--n", n, "iteration to read the candidate from")->required();
  certify->add_option("--out", out, "write the certified table here");
  certify->add_option("--report", report_path, "write the certification report (JSON) here");
  certify->add_option("--resume", resume_dir, "start from the checkpoints in this directory");
  std::size_t witnesses = 20;
  certify->add_option("--witnesses", witnesses, "violating positions to list on failure")->capture_default_str();

  auto add_lookup = [&](CLI::App* sub) {
    sub->add_option("--table", table, "table file")->required();
    sub->add_option("--fen", fen, "position")->required();
  };
  auto* value = app.add_subcommand("value", "exact value of a position");
  add_lookup(value);
  auto* best = app.add_subcommand("best-moves", "optimal moves for both sides");
  add_lookup(best);
  auto* rep = app.add_subcommand("report", "value, classification, Richman bid and best moves");
  add_lookup(rep);
  rep->add_flag("--json", as_json, "print JSON");

  auto* exp = app.add_subcommand("export", "one line per position: FEN num/den");
  exp->add_option("--table", table, "table file")->required();
  exp->add_option("--out", out, "output file, '-' for stdout");

  unsigned long bound = 10'000'000;
  auto* census = app.add_subcommand("census", "denominator census of one piece set");
  census->add_option("--table", table, "table file")->required();
  census->add_option("--pieces", set, "piece set id")->required();
  census->add_option("--trial-bound", bound, "trial division bound")->capture_default_str();

  std::size_t limit = 20;
  auto* zug = app.add_subcommand("zugzwang", "positions where neither side wants to move");
  zug->add_option("--table", table, "table file")->required();
  zug->add_option("--limit", limit, "positions to list")->capture_default_str();

  std::size_t trials = 100'000, horizon = 10'000;
  std::uint64_t seed = 1;
  auto* sim = app.add_subcommand("simulate", "random-turn Monte Carlo with greedy play");
  add_lookup(sim);
  sim->add_option("--trials", trials)->capture_default_str();
  sim->add_option("--horizon", horizon)->capture_default_str();
  sim->add_option("--seed", seed)->capture_default_str();

  auto* trace = app.add_subcommand("trace", "greedy play under a fixed coin sequence");
  add_lookup(trace);
  trace->add_option("--coins", coins, "W/B sequence, trailing * repeats it")->capture_default_str();

  std::string host = "127.0.0.1", log_path;
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "HTTP/JSON service");
  serve->add_option("--tables", table, std::string("table directory (default $") + kTableDirEnv + ")");
  serve->add_option("--host", host)->capture_default_str();
  serve->add_option("--port", port)->capture_default_str();
  serve->add_option("--log", log_path, "append protocol events here instead of stderr");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(sa, kind, n, checkpoint, resume_run, every);
    if (*certify) return cmd_certify(sa, n, out, report_path, resume_dir, witnesses);
    if (*value) return cmd_value(table, fen);
    if (*best) return cmd_best_moves(table, fen);
    if (*rep) return cmd_report(table, fen, as_json);
    if (*exp) return cmd_export(table, out);
    if (*census) return cmd_census(table, set, bound);
    if (*zug) return cmd_zugzwang(table, limit);
    if (*sim) return cmd_simulate(table, fen, trials, horizon, seed);
    if (*trace) return cmd_trace(table, fen, coins);
    if (*serve) return cmd_serve(table, host, port, log_path);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const LookupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kLookup;
  } catch (const IntegrityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIntegrity;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
