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

#include <memory>
#include <string>

namespace httplib {
class Server;
}

namespace phforge::cli {

/// Registers /api/* routes on a fresh server. Handlers hold no state.
std::unique_ptr<httplib::Server> make_server();

/// Blocks until the server stops. Returns false if the port cannot be bound.
bool serve(const std::string& host, int port);

} // namespace phforge::cli
