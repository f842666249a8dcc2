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

#ifndef RPI_TOOLS_TRACE_SCRIPT_HPP_
#define RPI_TOOLS_TRACE_SCRIPT_HPP_

#include <ostream>
#include <stdexcept>
#include <string>

#include "rpi/json_codec.hpp"

namespace rpi::cli {

// Batch trace scripts, one command per line:
//
//   semantics rpi|bs|cvy   memory kind for the following load
//   load TERM              start from TERM (plain or decorated notation)
//   fwd N [@K]             take the N-th forward transition, fresh key K
//   bwd N                  take the N-th backward transition
//   expect TERM            fail unless the current state equals TERM
//   ---                    start an independent run
//
// Blank lines and lines starting with '#' are ignored. Indices follow the
// order of `rpi steps`.

class ScriptError : public std::runtime_error {
 public:
  ScriptError(const std::string& what, int exit_code) : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

/// Runs a script, printing one line per step; returns the runs as JSON.
Json RunTraceScript(const std::string& script, std::ostream& out);

}  // namespace rpi::cli

#endif  // RPI_TOOLS_TRACE_SCRIPT_HPP_
