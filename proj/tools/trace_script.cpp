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

#include "trace_script.hpp"

#include <sstream>

#include "rpi/parser.hpp"
#include "rpi/semantics.hpp"

namespace rpi::cli {

namespace {

std::string Trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Run {
  SemanticsKind kind = SemanticsKind::kRpi;
  RPtr state;
  Json steps = Json::array();

  Json ToJson() const {
    Json j{{"semantics", std::string(rpi::ToString(kind))}, {"steps", steps}};
    j["final"] = state ? rpi::ToJson(state) : Json();
    return j;
  }
};

std::size_t ParseIndex(const std::string& text, const std::string& where) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ScriptError(where + ": bad number '" + text + "'", 1);
}

}  // namespace

Json RunTraceScript(const std::string& script, std::ostream& out) {
  Json runs = Json::array();
  Run run;
  std::istringstream in(script);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::string where = "line " + std::to_string(lineno);
    if (line == "---") {
      runs.push_back(run.ToJson());
      SemanticsKind kind = run.kind;
      run = Run{};
      run.kind = kind;
      out << "---\n";
      continue;
    }
    std::string cmd = line.substr(0, line.find(' '));
    std::string rest = cmd.size() < line.size() ? Trim(line.substr(cmd.size())) : "";
    if (cmd == "semantics") {
      auto kind = ParseSemanticsKind(rest);
      if (!kind) throw ScriptError(where + ": unknown semantics '" + rest + "'", 1);
      run.kind = *kind;
    } else if (cmd == "load" || cmd == "expect") {
      RPtr term;
      try {
        term = ParseRProcess(rest, run.kind);
      } catch (const ParseError& e) {
        throw ScriptError(where + ": " + e.what(), 1);
      }
      if (cmd == "load") {
        run.state = term;
        run.steps = Json::array();
        out << "load " << ToString(term) << "\n";
      } else if (!run.state || !Equal(run.state, term)) {
        throw ScriptError(where + ": expected " + ToString(term) + " but state is " +
                              (run.state ? ToString(run.state) : std::string("empty")),
                          1);
      }
    } else if (cmd == "fwd" || cmd == "bwd") {
      if (!run.state) throw ScriptError(where + ": no state loaded", 1);
      std::istringstream args(rest);
      std::string index_text, key_text;
      args >> index_text >> key_text;
      std::size_t index = ParseIndex(index_text, where);
      Engine engine(run.kind);
      std::vector<Transition> options;
      if (cmd == "fwd") {
        Key key = Engine::DefaultFreshKey(run.state);
        if (!key_text.empty()) {
          if (key_text[0] != '@') throw ScriptError(where + ": expected @KEY, got '" + key_text + "'", 1);
          key = static_cast<Key>(ParseIndex(key_text.substr(1), where));
          if (key == kStar || !Fresh(key, run.state)) {
            throw ScriptError(where + ": key " + std::to_string(key) + " is not fresh", 2);
          }
        }
        options = engine.Forward(run.state, key);
      } else {
        options = engine.Backward(run.state);
      }
      if (index >= options.size()) {
        throw ScriptError(where + ": " + cmd + " " + std::to_string(index) + " out of range (" +
                              std::to_string(options.size()) + " transitions)",
                          2);
      }
      const Transition& t = options[index];
      out << cmd << " " << index << "  " << t.label.ToString() << "\n  -> " << ToString(t.target) << "\n";
      Json j = ToJson(t.label);
      j["dir"] = std::string(ToString(t.dir));
      j["text"] = t.label.ToString();
      run.steps.push_back(std::move(j));
      run.state = t.target;
    } else {
      throw ScriptError(where + ": unknown command '" + cmd + "'", 1);
    }
  }
  runs.push_back(run.ToJson());
  return runs;
}

}  // namespace rpi::cli
