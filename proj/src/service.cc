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

#include "namediss/service.h"

#include <spdlog/spdlog.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "httplib.h"
#include "namediss/error.h"
#include "namediss/serialization.h"

namespace namediss {

using json = nlohmann::json;

namespace {

ApiResponse ErrorResponse(int status, const std::string &message) {
  return ApiResponse{status, json{{"error", message}}};
}

std::string FormatSessionId(std::size_t n) {
  std::string digits = std::to_string(n);
  if (digits.size() < 6) digits.insert(0, 6 - digits.size(), '0');
  return "s" + digits;
}

}  // namespace

ReviewService::ReviewService(std::shared_ptr<const Corpus> corpus,
                             SessionConfig config, ServiceOptions options)
    : corpus_(std::move(corpus)),
      config_(std::move(config)),
      options_(std::move(options)) {}

json ReviewService::ClusterView(const Cluster &cluster) const {
  json names = json::array();
  for (const NameVariant &v : cluster.candidate_principals) names.push_back(v.raw);
  json records = json::array();
  for (const std::string &id : cluster.record_ids) {
    const CitationRecord &r = corpus_->Get(id);
    json coauthors(std::vector<std::string>(r.authors.begin() + 1, r.authors.end()));
    records.push_back(json{{"id", r.id},
                           {"title", r.title},
                           {"venue", r.venue},
                           {"year", r.year ? json(*r.year) : json(nullptr)},
                           {"principal_author", r.principal()},
                           {"coauthors", coauthors}});
  }
  return json{{"id", cluster.id},
              {"discipline", cluster.discipline},
              {"principal", names},
              {"is_principal", cluster.principal},
              {"affiliations", cluster.affiliations},
              {"records", records}};
}

json ReviewService::View(const Session &session) const {
  json view = {{"id", session.id()},
               {"query", session.query().raw},
               {"state", StateName(session.state())},
               {"checkpoint", nullptr},
               {"decisions", DecisionScriptJson(session.decisions())},
               {"failure", session.failure()}};
  for (std::size_t i = 0; i < session.decisions().size(); ++i) {
    view["decisions"][i]["timestamp"] = session.decisions()[i].timestamp;
  }
  if (session.awaiting()) {
    view["checkpoint"] = CheckpointName(session.checkpoint());
    json options = json::array();
    for (const Cluster &c : session.clusters()) options.push_back(ClusterView(c));
    view["options"] = options;
  }
  if (session.state() == SessionState::kCompleted) {
    json clusters = json::array();
    for (const Cluster &c : session.FinalClusters()) clusters.push_back(ClusterView(c));
    view["clusters"] = clusters;
    view["result"] = FinalOutputJson(session);
  }
  return view;
}

std::shared_ptr<ReviewService::Entry> ReviewService::Find(const std::string &id) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

void ReviewService::Persist(const Session &session) const {
  if (options_.snapshot_dir.empty()) return;
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(options_.snapshot_dir, ec);
  const fs::path target = fs::path(options_.snapshot_dir) / (session.id() + ".json");
  const fs::path temp = fs::path(target).concat(".tmp");
  {
    std::ofstream out(temp);
    out << session.ToJson().dump();
    if (!out) {
      spdlog::error("cannot write snapshot {}", temp.string());
      return;
    }
  }
  fs::rename(temp, target, ec);
  if (ec) spdlog::error("cannot publish snapshot {}: {}", target.string(), ec.message());
}

ApiResponse ReviewService::CreateSession(const std::string &body) {
  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error &) {
    return ErrorResponse(400, "request body is not JSON");
  }
  if (!request.is_object() || !request.contains("query") ||
      !request["query"].is_string()) {
    return ErrorResponse(400, "missing string field 'query'");
  }
  std::optional<NameVariant> query = TryParseName(request["query"].get<std::string>());
  if (!query) return ErrorResponse(400, "query is not a parseable author name");

  std::string id;
  {
    std::lock_guard<std::mutex> lock(mu_);
    id = FormatSessionId(next_id_++);
  }
  Session session = Session::Start(corpus_, std::move(*query), config_, id);
  Persist(session);
  json view = View(session);
  const bool failed = session.state() == SessionState::kFailed;
  {
    std::lock_guard<std::mutex> lock(mu_);
    sessions_.emplace(id, std::make_shared<Entry>(std::move(session)));
  }
  if (failed) {
    view["error"] = view["failure"];
    return ApiResponse{500, view};
  }
  return ApiResponse{201, view};
}

ApiResponse ReviewService::GetSession(const std::string &id) const {
  std::shared_ptr<Entry> entry = Find(id);
  if (!entry) return ErrorResponse(404, "unknown session " + id);
  std::lock_guard<std::mutex> lock(entry->mu);
  return ApiResponse{200, View(entry->session)};
}

ApiResponse ReviewService::SubmitDecision(const std::string &id,
                                          const std::string &body) {
  std::shared_ptr<Entry> entry = Find(id);
  if (!entry) return ErrorResponse(404, "unknown session " + id);
  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error &) {
    return ErrorResponse(400, "request body is not JSON");
  }
  if (!request.is_object() || !request.contains("cluster_id") ||
      !request["cluster_id"].is_string()) {
    return ErrorResponse(400, "missing string field 'cluster_id'");
  }

  std::lock_guard<std::mutex> lock(entry->mu);
  Session &session = entry->session;
  if (request.contains("checkpoint")) {
    if (!request["checkpoint"].is_string()) {
      return ErrorResponse(400, "'checkpoint' must be a string");
    }
    if (!session.awaiting() ||
        request["checkpoint"].get<std::string>() !=
            CheckpointName(session.checkpoint())) {
      ApiResponse conflict = ErrorResponse(409, "checkpoint already decided");
      conflict.body["session"] = View(session);
      return conflict;
    }
  }
  try {
    session.SubmitDecision(request["cluster_id"].get<std::string>());
  } catch (const DecisionError &e) {
    ApiResponse conflict = ErrorResponse(409, e.what());
    conflict.body["session"] = View(session);
    return conflict;
  }
  Persist(session);
  return ApiResponse{200, View(session)};
}

json ReviewService::Snapshot(const std::string &id) const {
  std::shared_ptr<Entry> entry = Find(id);
  if (!entry) return nullptr;
  std::lock_guard<std::mutex> lock(entry->mu);
  return entry->session.ToJson();
}

std::size_t ReviewService::LoadSnapshots() {
  if (options_.snapshot_dir.empty()) return 0;
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(options_.snapshot_dir, ec)) return 0;
  std::vector<fs::path> files;
  for (const auto &item : fs::directory_iterator(options_.snapshot_dir)) {
    if (item.path().extension() == ".json") files.push_back(item.path());
  }
  std::sort(files.begin(), files.end());
  std::size_t loaded = 0;
  for (const fs::path &path : files) {
    try {
      std::ifstream in(path);
      json snapshot = json::parse(in);
      Session session =
          Session::FromJson(snapshot, corpus_, config_.affiliations, config_.search);
      std::lock_guard<std::mutex> lock(mu_);
      const std::string id = session.id();
      if (id.size() > 1 && id[0] == 's') {
        try {
          next_id_ = std::max(next_id_, std::stoul(id.substr(1)) + 1);
        } catch (const std::exception &) {
        }
      }
      sessions_[id] = std::make_shared<Entry>(std::move(session));
      ++loaded;
    } catch (const std::exception &e) {
      spdlog::warn("skipping snapshot {}: {}", path.string(), e.what());
    }
  }
  return loaded;
}

void ReviewService::Mount(httplib::Server &server) {
  const std::string origin = options_.cors_origin;
  server.set_default_headers({{"Access-Control-Allow-Origin", origin},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  auto reply = [](httplib::Response &res, const ApiResponse &api) {
    res.status = api.status;
    res.set_content(api.body.dump(), "application/json");
  };

  server.Options(R"(/api/.*)", [](const httplib::Request &, httplib::Response &res) {
    res.status = 204;
  });
  server.Get("/api/health", [](const httplib::Request &, httplib::Response &res) {
    res.set_content("ok", "text/plain");
  });
  server.Post("/api/sessions", [this, reply](const httplib::Request &req,
                                             httplib::Response &res) {
    reply(res, CreateSession(req.body));
  });
  server.Get(R"(/api/sessions/([^/]+))", [this, reply](const httplib::Request &req,
                                                      httplib::Response &res) {
    reply(res, GetSession(req.matches[1]));
  });
  server.Post(R"(/api/sessions/([^/]+)/decisions)",
              [this, reply](const httplib::Request &req, httplib::Response &res) {
                reply(res, SubmitDecision(req.matches[1], req.body));
              });
}

}  // namespace namediss
