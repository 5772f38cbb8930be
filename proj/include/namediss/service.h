// Copyright 2026 The NameDiss Authors.
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

#ifndef NAMEDISS_SERVICE_H_
#define NAMEDISS_SERVICE_H_

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "json.hpp"
#include "namediss/records.h"
#include "namediss/session.h"

namespace httplib {
class Server;
}

namespace namediss {

struct ServiceOptions {
  // Value of Access-Control-Allow-Origin.
  std::string cors_origin = "*";
  // When set, every session is written here as <id>.json after each change
  // and reloaded by LoadSnapshots().
  std::string snapshot_dir;
};

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

// JSON API over interactive sessions:
//
//   GET  /api/health                  -> 200 "ok"
//   POST /api/sessions                {query}         -> 201 view
//   GET  /api/sessions/{id}                           -> 200 view
//   POST /api/sessions/{id}/decisions {cluster_id[, checkpoint]} -> 200 view
//
// Requests on different sessions run concurrently; decisions on one session
// are serialized, and a decision that lost a race for a checkpoint gets 409.
class ReviewService {
 public:
  ReviewService(std::shared_ptr<const Corpus> corpus, SessionConfig config,
                ServiceOptions options = {});

  ApiResponse CreateSession(const std::string &body);
  ApiResponse GetSession(const std::string &id) const;
  ApiResponse SubmitDecision(const std::string &id, const std::string &body);

  // Registers the routes and CORS handling on `server`.
  void Mount(httplib::Server &server);

  // Reloads snapshots from the snapshot directory; returns how many.
  std::size_t LoadSnapshots();

  // Session snapshot, or null when the id is unknown.
  nlohmann::json Snapshot(const std::string &id) const;

  // The view rendered for a session (see README for field names).
  nlohmann::json View(const Session &session) const;

 private:
  struct Entry {
    mutable std::mutex mu;
    Session session;
    explicit Entry(Session s) : session(std::move(s)) {}
  };

  std::shared_ptr<Entry> Find(const std::string &id) const;
  void Persist(const Session &session) const;
  nlohmann::json ClusterView(const Cluster &cluster) const;

  std::shared_ptr<const Corpus> corpus_;
  SessionConfig config_;
  ServiceOptions options_;

  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::size_t next_id_ = 1;
};

}  // namespace namediss

#endif  // NAMEDISS_SERVICE_H_
