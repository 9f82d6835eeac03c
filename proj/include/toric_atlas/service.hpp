// Copyright 2026 The Toric Atlas Authors
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

/**
 * @file service.hpp
 * Stateless HTTP/JSON front end.
 *
 *   GET  /api/catalog?radix=R[&notation=N]  gate list
 *   POST /api/state/step                    apply a gate, decompose, classify
 *   POST /api/decompose                     toric point of a state
 *   POST /api/classify                      entanglement report of a 2-qubit state
 *   POST /api/render                        SVG of a scene
 *   GET  /api/schema                        request/response schemas
 *
 * Every 4xx body is {"code": ..., "message": ...}.
 */
#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <thread>

#include "toric_atlas/gates.hpp"
#include "toric_atlas/linalg.hpp"

namespace toric_atlas {

struct ServiceResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

struct ServiceOptions {
  Tolerances tol;
  Notation default_notation = Notation::math;
  std::string cors_origin = "*";
};

/// Request handling without any transport; safe to call concurrently.
class AtlasService {
 public:
  explicit AtlasService(ServiceOptions options = {});

  ServiceResponse handle(std::string_view method, std::string_view path,
                         const std::map<std::string, std::string> &query, std::string_view body) const;

  const ServiceOptions &options() const noexcept { return options_; }

 private:
  ServiceResponse catalog(const std::map<std::string, std::string> &query) const;
  ServiceResponse step(std::string_view body) const;
  ServiceResponse decompose_state(std::string_view body) const;
  ServiceResponse classify_state(std::string_view body) const;
  ServiceResponse render(std::string_view body) const;
  ServiceResponse schema() const;

  ServiceOptions options_;
  std::map<std::pair<int, Notation>, std::vector<GateMatrix>> catalogs_;
};

/// httplib transport around an AtlasService.
class HttpServer {
 public:
  explicit HttpServer(ServiceOptions options = {});
  ~HttpServer();
  HttpServer(const HttpServer &) = delete;
  HttpServer &operator=(const HttpServer &) = delete;

  /// Binds and serves on a background thread; port 0 picks a free port.
  /// Returns the bound port, or -1 on failure.
  int start(const std::string &host, int port);
  /// Binds and serves on the calling thread until stop(). Returns false if binding fails.
  bool listen(const std::string &host, int port);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::thread worker_;
};

}  // namespace toric_atlas
