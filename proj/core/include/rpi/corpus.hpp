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

#ifndef RPI_CORPUS_HPP_
#define RPI_CORPUS_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "rpi/syntax.hpp"

namespace rpi {

struct CorpusEntry {
  std::string name;
  std::string source;
  ProcessPtr process;
  int depth = 4;
};

using Corpus = std::vector<CorpusEntry>;

/// The built-in corpus: the worked processes plus small handwritten terms
/// (at most 3 parallel components, 2 restrictions and 5 prefixes each).
const Corpus& DefaultCorpus();

/// Loads every *.pi file of a directory, sorted by file name. A file holds
/// one process; a `# depth: N` line overrides the default depth bound.
/// Throws ParseError or std::runtime_error.
Corpus LoadCorpus(const std::filesystem::path& dir);

}  // namespace rpi

#endif  // RPI_CORPUS_HPP_
