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

#include "server.hpp"

#include <cstdio>
#include <functional>

#include "httplib.h"

#include "commands.hpp"

namespace phforge::cli {

namespace {

constexpr const char* kJson = "application/json";

// Runs `body` and maps the two error families onto 400 / 422.
void respond(httplib::Response& res, const std::function<void()>& body) {
    try {
        body();
    } catch (const ValidationError& e) {
        res.status = 400;
        res.set_content(error_body(e).dump(2) + "\n", kJson);
    } catch (const SolverEmpty& e) {
        res.status = 422;
        res.set_content(error_body(e).dump(2) + "\n", kJson);
    } catch (const std::exception& e) {
        res.status = 500;
        res.set_content(json{{"error", "internal"}, {"message", e.what()}}.dump(2) + "\n", kJson);
    }
}

void post_json(httplib::Server& s, const std::string& route,
               const std::function<json(const json&)>& handler) {
    s.Post(route, [handler](const httplib::Request& req, httplib::Response& res) {
        respond(res, [&] {
            res.set_content(handler(parse_text(req.body, "request body")).dump(2) + "\n", kJson);
        });
    });
}

} // namespace

std::unique_ptr<httplib::Server> make_server() {
    auto s = std::make_unique<httplib::Server>();
    s->Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(json{{"status", "ok"}}.dump() + "\n", kJson);
    });
    post_json(*s, "/api/info", run_info);
    post_json(*s, "/api/convert", run_convert);
    post_json(*s, "/api/ortho-basis", run_ortho_basis);
    post_json(*s, "/api/ortho-ph", run_ortho_ph);
    post_json(*s, "/api/arclen", run_arclen);
    s->Post(R"(/api/perturb/([a-z\-]+))", [](const httplib::Request& req, httplib::Response& res) {
        respond(res, [&] {
            const std::string scheme = req.matches[1];
            res.set_content(run_perturb(scheme, parse_text(req.body, "request body")).dump(2) + "\n",
                            kJson);
        });
    });
    s->Post("/api/render", [](const httplib::Request& req, httplib::Response& res) {
        respond(res, [&] {
            res.set_content(run_render(parse_text(req.body, "request body")), "image/svg+xml");
        });
    });
    return s;
}

bool serve(const std::string& host, int port) {
    auto s = make_server();
    std::fprintf(stderr, "phforge: listening on http://%s:%d\n", host.c_str(), port);
    return s->listen(host, port);
}

} // namespace phforge::cli
