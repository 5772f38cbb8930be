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

#ifndef NAMEDISS_EVALUATION_H_
#define NAMEDISS_EVALUATION_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "namediss/clustering.h"
#include "namediss/records.h"
#include "namediss/serialization.h"

namespace namediss {

// record id -> gold author key.
using GoldLabeling = std::map<std::string, std::string>;

// Labels of every record that carries an author_key.
GoldLabeling GoldFromCorpus(const Corpus &corpus);

// A predicted partition: one list of record ids per cluster.
struct Partition {
  std::vector<std::string> cluster_ids;
  std::vector<std::vector<std::string>> members;

  static Partition FromClusters(std::span<const Cluster> clusters);
  static Partition FromPredicted(std::span<const PredictedCluster> clusters);
};

// Pairwise clustering scores over all unordered record pairs in the
// partition. A ratio with a zero denominator is 1.
struct PairwiseScores {
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;
  std::uint64_t same_cluster_pairs = 0;
  std::uint64_t same_author_pairs = 0;
  std::uint64_t correct_pairs = 0;
};

// Throws DataError naming the first unlabeled or duplicated record.
PairwiseScores ScorePairwise(const Partition &predicted, const GoldLabeling &gold);

struct AuthorBreakdown {
  std::string author_key;
  std::size_t records = 0;
  std::size_t clusters = 0;
  // Predicted clusters holding this author's records, minus one.
  std::size_t split_count = 0;
};

struct ClusterBreakdown {
  std::string cluster_id;
  std::size_t records = 0;
  std::size_t authors = 0;
  // Two or more gold authors in one predicted cluster.
  bool mixed = false;
};

struct ConfusionReport {
  std::vector<AuthorBreakdown> authors;
  std::vector<ClusterBreakdown> clusters;

  std::size_t mixed_clusters() const;
  std::size_t total_split() const;
};

ConfusionReport BuildConfusionReport(const Partition &predicted,
                                     const GoldLabeling &gold);

nlohmann::json ReportJson(const PairwiseScores &scores,
                          const ConfusionReport &report);

// Aligned-column text rendering of the same report.
std::string FormatReport(const PairwiseScores &scores,
                         const ConfusionReport &report);

}  // namespace namediss

#endif  // NAMEDISS_EVALUATION_H_
