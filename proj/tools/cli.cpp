/*
 * Copyright (c) 2026, The rpi-workbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "rpi/corpus.hpp"
#include "rpi/http_service.hpp"
#include "rpi/json_codec.hpp"
#include "rpi/parser.hpp"
#include "rpi/verification.hpp"
#include "trace_script.hpp"

namespace rpi::cli {

namespace {

class Failure : public std::runtime_error {
 public:
  Failure(const std::string& what, int code) : std::runtime_error(what), code(code) {}
  int code;
};

std::string ReadFile(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Failure("cannot read '" + path + "'", 1);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SemanticsKind KindOf(const std::string& text) {
  auto kind = ParseSemanticsKind(text);
  if (!kind) throw Failure("unknown semantics '" + text + "'", 1);
  return *kind;
}

RPtr LoadState(const std::string& path, SemanticsKind kind) {
  std::string text = ReadFile(path);
  try {
    return ParseRProcess(text, kind);
  } catch (const ParseError& e) {
    throw Failure(path + ": " + e.what(), 1);
  }
}

std::vector<Transition> Listing(const RPtr& x, SemanticsKind kind, const std::string& dir, std::optional<Key> key) {
  Engine engine(kind);
  if (dir == "bwd") return engine.Backward(x);
  Key fresh = key.value_or(Engine::DefaultFreshKey(x));
  if (fresh == kStar || !Fresh(fresh, x)) throw Failure("key " + std::to_string(fresh) + " is not fresh", 2);
  return engine.Forward(x, fresh);
}

Fault FaultOf(const std::string& text) {
  if (text.empty() || text == "none") return Fault::kNone;
  if (text == "drop-output-undo") return Fault::kDropOutputUndo;
  if (text == "skip-substitution") return Fault::kSkipSubstitution;
  if (text == "keep-restriction-on-open") return Fault::kKeepRestrictionOnOpen;
  throw Failure("unknown fault '" + text + "'", 1);
}

std::shared_ptr<spdlog::logger> MakeLogger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("rpi", sink);
  logger->set_pattern("[%l] %v");
  const char* env = std::getenv("RPI_LOG");
  logger->set_level(env ? spdlog::level::from_str(env) : spdlog::level::info);
  return logger;
}

}  // namespace

int CliMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto log = MakeLogger(err);

  CLI::App app{"Reversible pi-calculus workbench"};
  app.require_subcommand(1);

  std::string file, state_file, semantics = "rpi", dir = "fwd", corpus_dir, fault, origin = "http://localhost:5173";
  std::string host = "127.0.0.1";
  std::optional<Key> key;
  std::size_t id = 0;
  int depth = 0, port = 8080;
  bool json = false, literal = false, sequential = false;
  std::string property, check_semantics = "all";

  auto* parse = app.add_subcommand("parse", "Parse a process and print it as JSON");
  parse->add_option("FILE", file, "Source file, - for stdin")->required();

  auto* steps = app.add_subcommand("steps", "List the transitions of a state as JSON");
  auto* step = app.add_subcommand("step", "Apply a transition by index and print the new state");
  for (auto* sub : {steps, step}) {
    sub->add_option("--semantics", semantics, "rpi, bs or cvy")->check(CLI::IsMember({"rpi", "bs", "cvy"}));
    sub->add_option("--state", state_file, "State file, - for stdin")->required();
    sub->add_option("--dir", dir, "fwd or bwd")->check(CLI::IsMember({"fwd", "bwd"}));
    sub->add_option("--key", key, "Fresh key for forward transitions");
  }
  step->add_option("--id", id, "Index in the `steps` listing")->required();
  step->add_flag("--json", json, "Print the transition and state as JSON");

  auto* trace = app.add_subcommand("trace", "Run a trace script");
  trace->add_option("--script", file, "Script file, - for stdin")->required();
  trace->add_flag("--json", json, "Print the runs as JSON");

  auto* check = app.add_subcommand("check", "Bounded verification over a corpus");
  check->add_option("PROPERTY", property, "loop, square, consistency, bisim or bs-corr")
      ->required()
      ->check(CLI::IsMember({"loop", "square", "consistency", "bisim", "bs-corr"}));
  check->add_option("--semantics", check_semantics, "rpi, bs, cvy or all")->check(CLI::IsMember({"rpi", "bs", "cvy", "all"}));
  check->add_option("--corpus", corpus_dir, "Directory of *.pi files (default: built-in corpus)");
  check->add_option("--depth", depth, "Exploration depth (default: per entry)");
  check->add_option("--fault", fault, "Inject an engine fault");
  check->add_flag("--literal-concurrency", literal, "Square lemma with structural and object causality only");
  check->add_flag("--sequential", sequential, "Do not run corpus entries in parallel");

  auto* serve = app.add_subcommand("serve", "Run the HTTP session service");
  serve->add_option("--host", host, "Listen address");
  serve->add_option("--port", port, "Listen port");
  serve->add_option("--corpus", corpus_dir, "Corpus offered at GET /corpus");
  serve->add_option("--depth", depth, "Default exploration depth");
  serve->add_option("--origin", origin, "Allowed CORS origin");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (*parse) {
      std::string text = ReadFile(file);
      try {
        out << ToJson(ParseProcess(text)).dump(2) << "\n";
      } catch (const ParseError& e) {
        throw Failure(file + ": " + e.what(), 1);
      }
      return 0;
    }

    if (*steps || *step) {
      SemanticsKind kind = KindOf(semantics);
      RPtr x = LoadState(state_file, kind);
      auto listing = Listing(x, kind, dir, key);
      if (*steps) {
        Json arr = Json::array();
        for (std::size_t i = 0; i < listing.size(); ++i) {
          Json j = ToJson(listing[i]);
          j["index"] = i;
          arr.push_back(std::move(j));
        }
        out << arr.dump(2) << "\n";
        return 0;
      }
      if (id >= listing.size()) {
        throw Failure("transition " + std::to_string(id) + " out of range (" + std::to_string(listing.size()) +
                          " " + dir + " transitions)",
                      2);
      }
      const Transition& t = listing[id];
      if (json) {
        out << ToJson(t).dump(2) << "\n";
      } else {
        out << ToString(t.target) << "\n";
      }
      return 0;
    }

    if (*trace) {
      std::ostringstream steps_text;
      Json runs = RunTraceScript(ReadFile(file), json ? steps_text : out);
      if (json) out << runs.dump(2) << "\n";
      return 0;
    }

    if (*check) {
      Corpus corpus = corpus_dir.empty() ? DefaultCorpus() : LoadCorpus(corpus_dir);
      CheckOptions options;
      options.depth = depth;
      options.fault = FaultOf(fault);
      options.parallel = !sequential;
      options.literal_concurrency = literal;
      std::vector<SemanticsKind> kinds;
      if (property == "bs-corr") {
        kinds = {SemanticsKind::kBs};
      } else if (check_semantics == "all") {
        kinds.assign(std::begin(kAllKinds), std::end(kAllKinds));
      } else {
        kinds = {KindOf(check_semantics)};
      }
      Json reports = Json::array();
      bool ok = true;
      for (SemanticsKind kind : kinds) {
        auto start = std::chrono::steady_clock::now();
        CheckReport r;
        if (property == "loop") r = CheckLoopLemma(corpus, kind, options);
        if (property == "square") r = CheckSquareLemma(corpus, kind, options);
        if (property == "consistency") r = CheckCausalConsistency(corpus, kind, options);
        if (property == "bisim") r = CheckBisim(corpus, kind, options);
        if (property == "bs-corr") r = CheckBsCorrespondence(corpus, options);
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        Json j = r.ToJson();
        j["seconds"] = seconds;
        reports.push_back(std::move(j));
        err << r.Summary() << "\n";
        log->debug("{} [{}] took {:.3f}s", r.property, r.kind, seconds);
        ok = ok && r.ok;
      }
      out << reports.dump(2) << "\n";
      return ok ? 0 : 1;
    }

    if (*serve) {
      SessionStore store;
      ServiceOptions options;
      options.allowed_origin = origin;
      options.corpus = corpus_dir.empty() ? DefaultCorpus() : LoadCorpus(corpus_dir);
      if (depth > 0) options.depth = depth;
      HttpService service(store, options);
      int bound = service.Bind(host, port);
      if (bound < 0) throw Failure("cannot listen on " + host + ":" + std::to_string(port), 1);
      log->info("listening on http://{}:{}", host, bound);
      return service.Run() ? 0 : 1;
    }
  } catch (const Failure& f) {
    err << "rpi: " << f.what() << "\n";
    return f.code;
  } catch (const ScriptError& e) {
    err << "rpi: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "rpi: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace rpi::cli
