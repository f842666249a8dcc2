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

#ifndef RPI_TOOLS_CLI_HPP_
#define RPI_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace rpi::cli {

/// Entry point of the `rpi` tool. `args` excludes the program name.
/// Exit codes: 0 success, 1 parse error or failed check, 2 bad step request.
int CliMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpi::cli

#endif  // RPI_TOOLS_CLI_HPP_
