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

#include "namediss/evaluation.h"

#include <fmt/format.h>

#include <algorithm>
#include <set>

#include "namediss/error.h"

namespace namediss {

GoldLabeling GoldFromCorpus(const Corpus &corpus) {
  GoldLabeling gold;
  for (const CitationRecord &r : corpus.records()) {
    if (r.author_key) gold[r.id] = *r.author_key;
  }
  return gold;
}

Partition Partition::FromClusters(std::span<const Cluster> clusters) {
  Partition p;
  for (const Cluster &c : clusters) {
    p.cluster_ids.push_back(c.id);
    p.members.emplace_back(c.record_ids.begin(), c.record_ids.end());
  }
  return p;
}

Partition Partition::FromPredicted(std::span<const PredictedCluster> clusters) {
  Partition p;
  for (const PredictedCluster &c : clusters) {
    p.cluster_ids.push_back(c.id);
    p.members.push_back(c.record_ids);
  }
  return p;
}

namespace {

std::uint64_t Pairs(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

double Ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
}

// Validates coverage and returns per-cluster author counts.
std::vector<std::map<std::string, std::size_t>> Contingency(
    const Partition &predicted, const GoldLabeling &gold) {
  std::set<std::string> seen;
  std::vector<std::map<std::string, std::size_t>> table;
  for (const auto &members : predicted.members) {
    std::map<std::string, std::size_t> counts;
    for (const std::string &id : members) {
      if (!seen.insert(id).second) {
        throw DataError("record " + id + " appears in more than one cluster");
      }
      auto label = gold.find(id);
      if (label == gold.end()) throw DataError("record " + id + " has no gold label");
      ++counts[label->second];
    }
    table.push_back(std::move(counts));
  }
  return table;
}

}  // namespace

PairwiseScores ScorePairwise(const Partition &predicted, const GoldLabeling &gold) {
  const auto table = Contingency(predicted, gold);
  PairwiseScores s;
  std::map<std::string, std::uint64_t> per_author;
  for (std::size_t i = 0; i < table.size(); ++i) {
    s.same_cluster_pairs += Pairs(predicted.members[i].size());
    for (const auto &[author, n] : table[i]) {
      s.correct_pairs += Pairs(n);
      per_author[author] += n;
    }
  }
  for (const auto &[author, n] : per_author) s.same_author_pairs += Pairs(n);
  s.precision = Ratio(s.correct_pairs, s.same_cluster_pairs);
  s.recall = Ratio(s.correct_pairs, s.same_author_pairs);
  s.f1 = s.precision + s.recall == 0.0
             ? 0.0
             : 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

std::size_t ConfusionReport::mixed_clusters() const {
  return static_cast<std::size_t>(std::count_if(
      clusters.begin(), clusters.end(), [](const ClusterBreakdown &c) { return c.mixed; }));
}

std::size_t ConfusionReport::total_split() const {
  std::size_t total = 0;
  for (const AuthorBreakdown &a : authors) total += a.split_count;
  return total;
}

ConfusionReport BuildConfusionReport(const Partition &predicted,
                                     const GoldLabeling &gold) {
  const auto table = Contingency(predicted, gold);
  ConfusionReport report;
  std::map<std::string, AuthorBreakdown> authors;
  for (std::size_t i = 0; i < table.size(); ++i) {
    ClusterBreakdown c;
    c.cluster_id = predicted.cluster_ids[i];
    c.records = predicted.members[i].size();
    c.authors = table[i].size();
    c.mixed = c.authors >= 2;
    report.clusters.push_back(c);
    for (const auto &[author, n] : table[i]) {
      AuthorBreakdown &a = authors[author];
      a.author_key = author;
      a.records += n;
      ++a.clusters;
    }
  }
  for (auto &[key, a] : authors) {
    a.split_count = a.clusters - 1;
    report.authors.push_back(a);
  }
  return report;
}

nlohmann::json ReportJson(const PairwiseScores &scores,
                          const ConfusionReport &report) {
  using json = nlohmann::json;
  json authors = json::array();
  for (const AuthorBreakdown &a : report.authors) {
    authors.push_back(json{{"author_key", a.author_key},
                           {"records", a.records},
                           {"clusters", a.clusters},
                           {"split_count", a.split_count}});
  }
  json clusters = json::array();
  for (const ClusterBreakdown &c : report.clusters) {
    clusters.push_back(json{{"cluster_id", c.cluster_id},
                            {"records", c.records},
                            {"authors", c.authors},
                            {"mixed", c.mixed}});
  }
  return json{{"pairwise",
               {{"precision", scores.precision},
                {"recall", scores.recall},
                {"f1", scores.f1},
                {"same_cluster_pairs", scores.same_cluster_pairs},
                {"same_author_pairs", scores.same_author_pairs},
                {"correct_pairs", scores.correct_pairs}}},
              {"authors", authors},
              {"clusters", clusters},
              {"mixed_clusters", report.mixed_clusters()},
              {"total_split", report.total_split()}};
}

std::string FormatReport(const PairwiseScores &scores,
                         const ConfusionReport &report) {
  std::string out;
  out += fmt::format("precision  {:.4f}\nrecall     {:.4f}\nf1         {:.4f}\n\n",
                     scores.precision, scores.recall, scores.f1);

  std::size_t width = std::string_view("author").size();
  for (const AuthorBreakdown &a : report.authors) width = std::max(width, a.author_key.size());
  out += fmt::format("{:<{}}  {:>7}  {:>8}  {:>5}\n", "author", width, "records",
                     "clusters", "split");
  for (const AuthorBreakdown &a : report.authors) {
    out += fmt::format("{:<{}}  {:>7}  {:>8}  {:>5}\n", a.author_key, width,
                       a.records, a.clusters, a.split_count);
  }
  out += '\n';

  width = std::string_view("cluster").size();
  for (const ClusterBreakdown &c : report.clusters) width = std::max(width, c.cluster_id.size());
  out += fmt::format("{:<{}}  {:>7}  {:>7}  {:>5}\n", "cluster", width, "records",
                     "authors", "mixed");
  for (const ClusterBreakdown &c : report.clusters) {
    out += fmt::format("{:<{}}  {:>7}  {:>7}  {:>5}\n", c.cluster_id, width,
                       c.records, c.authors, c.mixed ? "yes" : "no");
  }
  return out;
}

}  // namespace namediss
