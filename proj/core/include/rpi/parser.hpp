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

#ifndef RPI_PARSER_HPP_
#define RPI_PARSER_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rpi/syntax.hpp"

namespace rpi {

/// Syntax error with a 0-based byte offset and 1-based line/column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line, std::size_t column);

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

/**
 * Parses a plain process.
 *
 *   P ::= "0" | chan "<" chan ">" ["." P] | chan "(" ident ")" ["." P]
 *       | P "|" P | "new" ident "." P | "(" P ")"
 *
 * `|` associates to the right, prefixes bind tighter than `|`, and
 * `new a.P` extends as far right as possible. A prefix with no continuation
 * stands for a prefix followed by 0. `#` starts a comment up to end of line.
 */
ProcessPtr ParseProcess(std::string_view text);

/**
 * Parses a reversible process written in the printer's notation:
 *
 *   b^3<a>[4,{*,2}].P     past output, key 4, cause {*,2}; `^3` is an
 *                         instantiator; `[4,*]` abbreviates cause {*}
 *   b(x)[4,*].P           past input
 *   new a{1,2}.P          RPI memory
 *   new a{1,2}_1.P        BS memory with index 1 (`_*` for no index)
 *   new a{1,2}_{*,1}.P    CVY memory
 *
 * A bare `new a.P` gets an initialised memory of `kind`.
 */
RPtr ParseRProcess(std::string_view text, SemanticsKind kind);

}  // namespace rpi

#endif  // RPI_PARSER_HPP_
