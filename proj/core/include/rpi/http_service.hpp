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

#ifndef RPI_HTTP_SERVICE_HPP_
#define RPI_HTTP_SERVICE_HPP_

#include <memory>
#include <string>

#include "rpi/corpus.hpp"
#include "rpi/session.hpp"

namespace rpi {

struct ServiceOptions {
  std::string allowed_origin = "http://localhost:5173";
  Corpus corpus;  // served read-only at GET /corpus
  int depth = 4;  // default exploration bound reported with the corpus
};

/**
 * HTTP front of a SessionStore.
 *
 *   POST   /sessions                  {source, semantics} -> {id, semantics, state}
 *   GET    /sessions/:id/state
 *   GET    /sessions/:id/transitions  ?dir=fwd|bwd
 *   POST   /sessions/:id/step         {transition_id}
 *   GET    /sessions/:id/trace
 *   GET    /sessions/:id/causality
 *   GET    /sessions/:id/replay
 *   DELETE /sessions/:id
 *   GET    /corpus
 */
class HttpService {
 public:
  HttpService(SessionStore& store, ServiceOptions options = {});
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Binds; port 0 picks a free port. Returns the bound port or -1.
  int Bind(const std::string& host, int port);
  /// Serves until Stop(); call after Bind.
  bool Run();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace rpi

#endif  // RPI_HTTP_SERVICE_HPP_
