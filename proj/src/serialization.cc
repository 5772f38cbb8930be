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

#include "namediss/serialization.h"

#include <algorithm>

#include "namediss/error.h"
#include "namediss/session.h"

namespace namediss {

using json = nlohmann::json;

json ClusterToJson(const Cluster &cluster) {
  json candidates = json::array();
  for (const NameVariant &v : cluster.candidate_principals) candidates.push_back(v.raw);
  json terms = json::object();
  for (const auto &[term, count] : cluster.vector.terms()) terms[term] = count;
  return json{{"id", cluster.id},
              {"record_ids", cluster.record_ids},
              {"discipline", cluster.discipline},
              {"candidate_principals", candidates},
              {"affiliations", cluster.affiliations},
              {"vector", terms},
              {"principal", cluster.principal}};
}

Cluster ClusterFromJson(const json &j) {
  try {
    Cluster c;
    c.id = j.at("id").get<std::string>();
    c.record_ids = j.at("record_ids").get<std::set<std::string>>();
    c.discipline = j.at("discipline").get<std::string>();
    for (const json &raw : j.at("candidate_principals")) {
      c.candidate_principals.push_back(ParseName(raw.get<std::string>()));
    }
    c.affiliations = j.at("affiliations").get<std::set<std::string>>();
    for (const auto &[term, count] : j.at("vector").items()) {
      c.vector.Add(term, count.get<std::uint32_t>());
    }
    c.principal = j.at("principal").get<bool>();
    if (c.record_ids.empty()) throw DataError("cluster " + c.id + " has no records");
    return c;
  } catch (const json::exception &e) {
    throw DataError(std::string("malformed cluster snapshot: ") + e.what());
  }
}

json FinalOutputJson(const Session &session) {
  std::vector<Cluster> clusters = session.state() == SessionState::kCompleted
                                      ? session.FinalClusters()
                                      : session.clusters();
  std::sort(clusters.begin(), clusters.end(),
            [](const Cluster &a, const Cluster &b) { return a.id < b.id; });
  json out_clusters = json::array();
  for (const Cluster &c : clusters) {
    json names = json::array();
    for (const NameVariant &v : c.candidate_principals) names.push_back(v.raw);
    out_clusters.push_back(json{{"id", c.id},
                                {"discipline", c.discipline},
                                {"principal", names},
                                {"record_ids", c.record_ids}});
  }
  json principal = nullptr;
  if (auto id = session.principal_cluster_id()) principal = *id;
  return json{{"session_id", session.id()},
              {"query", session.query().raw},
              {"principal_cluster_id", principal},
              {"clusters", out_clusters}};
}

std::string DumpStable(const json &j) { return j.dump(2) + "\n"; }

std::vector<PredictedCluster> ParsePredictedClusters(const json &output) {
  try {
    std::vector<PredictedCluster> out;
    for (const json &c : output.at("clusters")) {
      out.push_back(PredictedCluster{
          c.at("id").get<std::string>(),
          c.at("record_ids").get<std::vector<std::string>>()});
    }
    return out;
  } catch (const json::exception &e) {
    throw DataError(std::string("malformed cluster output: ") + e.what());
  }
}

}  // namespace namediss
