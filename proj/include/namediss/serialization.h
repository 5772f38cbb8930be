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

#ifndef NAMEDISS_SERIALIZATION_H_
#define NAMEDISS_SERIALIZATION_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "namediss/clustering.h"

namespace namediss {

class Session;

// Full cluster state, used in session snapshots.
nlohmann::json ClusterToJson(const Cluster &cluster);
Cluster ClusterFromJson(const nlohmann::json &j);

// The stable batch output schema:
//
//   {"session_id", "query", "principal_cluster_id",
//    "clusters": [{"id", "discipline", "principal": [names], "record_ids"}]}
//
// Clusters are sorted by id and record ids ascending, so equal sessions
// serialize to equal bytes. principal_cluster_id is null unless completed.
nlohmann::json FinalOutputJson(const Session &session);

// Same bytes for the same session: two-space indent and a trailing newline.
std::string DumpStable(const nlohmann::json &j);

struct PredictedCluster {
  std::string id;
  std::vector<std::string> record_ids;
};

// Reads the "clusters" array of a batch output document. Throws DataError on
// a malformed document.
std::vector<PredictedCluster> ParsePredictedClusters(const nlohmann::json &output);

}  // namespace namediss

#endif  // NAMEDISS_SERIALIZATION_H_
