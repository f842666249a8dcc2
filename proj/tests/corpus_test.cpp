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

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "rpi/corpus.hpp"
#include "rpi/parser.hpp"

namespace rpi {
namespace {

TEST(Corpus, DirectoryMatchesBuiltins) {
  Corpus dir = LoadCorpus(RPI_CORPUS_DIR);
  const Corpus& builtin = DefaultCorpus();
  ASSERT_EQ(dir.size(), builtin.size());
  for (std::size_t n = 0; n < dir.size(); ++n) {
    EXPECT_EQ(dir[n].name, builtin[n].name);
    EXPECT_TRUE(Equal(dir[n].process, builtin[n].process)) << dir[n].name;
    EXPECT_EQ(dir[n].depth, builtin[n].depth) << dir[n].name;
  }
}

TEST(Corpus, BuiltinsAreSortedAndParse) {
  const Corpus& c = DefaultCorpus();
  EXPECT_GE(c.size(), 20u);
  for (std::size_t n = 1; n < c.size(); ++n) EXPECT_LT(c[n - 1].name, c[n].name);
  for (const auto& e : c) EXPECT_TRUE(Equal(ParseProcess(e.source), e.process)) << e.name;
}

TEST(Corpus, DepthDirective) {
  auto dir = std::filesystem::temp_directory_path() / "rpi_corpus_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "b.pi") << "# depth: 2\na<b> | c<d>\n";
  std::ofstream(dir / "a.pi") << "new a.b<a>\n";
  std::ofstream(dir / "notes.txt") << "ignored\n";
  Corpus c = LoadCorpus(dir);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].name, "a");
  EXPECT_EQ(c[0].depth, 4);
  EXPECT_EQ(c[1].name, "b");
  EXPECT_EQ(c[1].depth, 2);
  std::filesystem::remove_all(dir);
}

TEST(Corpus, BadFileReportsParseError) {
  auto dir = std::filesystem::temp_directory_path() / "rpi_corpus_bad";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "bad.pi") << "b<a.\n";
  EXPECT_THROW(LoadCorpus(dir), ParseError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace rpi
