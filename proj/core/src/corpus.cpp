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

#include "rpi/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "rpi/parser.hpp"

namespace rpi {

namespace {

struct Builtin {
  const char* name;
  const char* source;
};

// Keep in sync with corpus/*.pi (checked by the corpus tests).
constexpr Builtin kBuiltins[] = {
    {"close_simple", "(new a.b<a>) | b(x).x<c>"},
    {"close_with_use", "(new a.(b<a> | a(y))) | b(x).x<c>"},
    {"com_chain", "d<e>.b<a>.f<g> | b(x)"},
    {"com_substitution", "b<a> | b(x).x<c>"},
    {"double_extrusion", "new a.(new b.(c<b> | d<a> | b<a>))"},
    {"extrude_then_use", "new a.b<a>.a<c>"},
    {"extrude_twice", "new a.b<a>.c<a>"},
    {"extruders_and_continuation", "new a.(b<a> | c<a> | a(z).d<z>)"},
    {"input_forward", "b(x).c<x>"},
    {"input_race", "b(x) | b(y) | b<a>"},
    {"local_or_extrude", "new a.(c<a> | c(x).x<e>)"},
    {"mobility", "(new a.b<a>.a(y)) | b(x).x<c>"},
    {"open_then_input", "new a.(b<a> | a(x))"},
    {"output_then_input", "b<a>.b(x)"},
    {"parallel_outputs", "b<a> | c<e>"},
    {"private_com", "new a.(a<b> | a(x).x<c>)"},
    {"relay", "b(x).c<x> | b<a> | c(y).y<e>"},
    {"restricted_channel", "new b.(b<a> | b(x).c<x>)"},
    {"restricted_race", "(new a.(b<a> | b<a>)) | b(x)"},
    {"sequence", "b<a>.c<e>"},
    {"three_extruders", "new a.(b<a> | c<a> | a(z))"},
    {"two_receivers", "b<a> | b(x).x<c> | b(y).y<e>"},
    {"two_restrictions", "new a.(new e.(b<a> | b<e> | a(x)))"},
    {"two_senders", "b<a> | b<e> | b(x).x<c>"},
};

}  // namespace

const Corpus& DefaultCorpus() {
  static const Corpus corpus = [] {
    Corpus out;
    for (const auto& b : kBuiltins) out.push_back({b.name, b.source, ParseProcess(b.source), 4});
    return out;
  }();
  return corpus;
}

Corpus LoadCorpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".pi") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  static const std::regex kDepth(R"(^\s*#\s*depth:\s*(\d+)\s*$)");
  Corpus out;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream text;
    text << in.rdbuf();
    CorpusEntry entry{f.stem().string(), text.str(), nullptr, 4};
    std::string line;
    std::istringstream lines(entry.source);
    while (std::getline(lines, line)) {
      std::smatch m;
      if (std::regex_match(line, m, kDepth)) entry.depth = std::stoi(m[1]);
    }
    entry.process = ParseProcess(entry.source);
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace rpi
