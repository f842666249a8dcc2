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

#ifndef RPI_JSON_CODEC_HPP_
#define RPI_JSON_CODEC_HPP_

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "rpi/causality.hpp"
#include "rpi/memory.hpp"
#include "rpi/semantics.hpp"
#include "rpi/syntax.hpp"

namespace rpi {

using Json = nlohmann::json;

// Shared wire format for the CLI and the HTTP service. Keys are numbers and
// the empty cause marker is the string "*".

class JsonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json KeyToJson(Key k);
Key KeyFromJson(const Json& j);
Json CauseToJson(const CauseSet& k);
CauseSet CauseFromJson(const Json& j);

Json ToJson(const Memory& m);
Memory MemoryFromJson(const Json& j);

Json ToJson(const ProcessPtr& p);
ProcessPtr ProcessFromJson(const Json& j);

/// {"text": printer notation, "term": tree}
Json ToJson(const RPtr& x);
/// Accepts the tree form or an object with only "text".
RPtr RProcessFromJson(const Json& j, SemanticsKind kind);

Json ToJson(const Action& a);
Action ActionFromJson(const Json& j);

Json ToJson(const Label& l);
Label LabelFromJson(const Json& j);

/// Label fields plus "dir", "text" and the target state.
Json ToJson(const Transition& t);

/// Nodes are trace positions, edges typed "structural" or "object".
Json CausalityToJson(const Trace& trace);

}  // namespace rpi

#endif  // RPI_JSON_CODEC_HPP_
