// Copyright 2026 The phforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace phforge::testing {

/// One request issued through both front ends.
struct ParityCase {
    std::string name;
    std::vector<std::string> cli_args;  ///< after the binary name
    std::string route;                  ///< e.g. "/api/perturb/tangent-legendre"
    std::string body;                   ///< JSON request body
};

struct ParityOutcome {
    std::string name;
    bool identical = false;
    int cli_exit = -1;
    int http_status = -1;
    std::string cli_output;
    std::string http_output;
};

/// Requests covering every shipped fixture and every command family.
std::vector<ParityCase> fixture_cases(const std::string& fixtures_dir);

/// Runs every case through `cli_path` and through an in-process server on
/// an ephemeral port.
std::vector<ParityOutcome> run_parity(const std::string& cli_path,
                                      const std::vector<ParityCase>& cases);

} // namespace phforge::testing
