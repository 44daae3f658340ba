// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QWALK_TOOLS_CLI_H
#define QWALK_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qwalk::cli {

/// Provenance written at the top of every output: the command, every
/// parameter it ran with, and the tool version.
struct RunManifest {
    std::string command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();

    nlohmann::ordered_json to_json() const;
    /// "# manifest: {...}" (no trailing newline).
    std::string header_line() const;
};

/// 12 significant digits; scientific notation when 0 < |x| < 1e-3.
std::string format_number(double x);

/// Rounds to the 12 significant digits format_number prints, for JSON output.
double round_reported(double x);

/// Runs the qwalk command line. args excludes the program name. Data goes to
/// the --out file when given and to `out` otherwise; diagnostics go to `err`.
/// Returns 0 on success, 1 on a runtime/domain error and 2 on a usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Everything after the '#' comment lines of a CSV or JSON output.
std::string strip_comment_header(std::string_view text);

}  // namespace qwalk::cli

#endif
