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

#include <cstdio>

#include "parity.hpp"

// Every fixture request through the CLI binary and the HTTP service must
// produce byte-identical bodies.
int main(int argc, char** argv) {
    if (argc != 3) {
        std::fprintf(stderr, "usage: parity_check <phforge binary> <fixtures dir>\n");
        return 2;
    }
    const auto outcomes = phforge::testing::run_parity(argv[1], phforge::testing::fixture_cases(argv[2]));
    int failed = 0;
    for (const auto& o : outcomes) {
        std::printf("%-40s %s (exit %d, status %d)\n", o.name.c_str(), o.identical ? "same" : "DIFFERENT",
                    o.cli_exit, o.http_status);
        if (!o.identical) {
            ++failed;
            std::printf("--- cli\n%s\n--- http\n%s\n", o.cli_output.c_str(), o.http_output.c_str());
        }
    }
    std::printf("%zu cases, %d different\n", outcomes.size(), failed);
    return failed == 0 ? 0 : 1;
}
