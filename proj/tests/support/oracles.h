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

// Reference implementations used only by tests. Each one takes a different
// route from the production code it checks.

#ifndef NAMEDISS_TESTS_ORACLES_H_
#define NAMEDISS_TESTS_ORACLES_H_

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "namediss/clustering.h"
#include "namediss/names.h"
#include "namediss/records.h"

namespace namediss::testing {

// Textbook recursive edit distance, exponential time.
inline std::size_t NaiveLevenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.empty()) return b.size();
  if (b.empty()) return a.size();
  if (a.front() == b.front()) return NaiveLevenshtein(a.substr(1), b.substr(1));
  return 1 + std::min({NaiveLevenshtein(a.substr(1), b),
                       NaiveLevenshtein(a, b.substr(1)),
                       NaiveLevenshtein(a.substr(1), b.substr(1))});
}

// Warshall transitive closure of a symmetric relation over n items, then the
// equivalence classes as sorted index sets.
inline std::set<std::set<std::size_t>> ClosureClasses(
    const std::vector<std::vector<bool>> &relation) {
  const std::size_t n = relation.size();
  std::vector<std::vector<bool>> reach = relation;
  for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  std::set<std::set<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::size_t> cls;
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j]) cls.insert(j);
    }
    classes.insert(cls);
  }
  return classes;
}

struct PairCounts {
  std::size_t same_cluster = 0;
  std::size_t same_author = 0;
  std::size_t both = 0;
};

// Enumerates every unordered record pair.
inline PairCounts EnumeratePairs(const std::vector<std::vector<std::string>> &clusters,
                                 const std::map<std::string, std::string> &gold) {
  std::vector<std::pair<std::string, std::size_t>> items;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (const std::string &id : clusters[c]) items.emplace_back(id, c);
  }
  PairCounts counts;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      const bool cluster = items[i].second == items[j].second;
      const bool author = gold.at(items[i].first) == gold.at(items[j].first);
      counts.same_cluster += cluster;
      counts.same_author += author;
      counts.both += cluster && author;
    }
  }
  return counts;
}

// Co-author components of `cluster` by brute-force closure: two records are
// related when some co-author of one is compatible with some co-author of the
// other.
inline std::set<std::set<std::string>> CoauthorComponents(const Cluster &cluster,
                                                          const Corpus &corpus) {
  const std::vector<std::string> ids(cluster.record_ids.begin(), cluster.record_ids.end());
  std::vector<std::vector<NameVariant>> coauthors;
  for (const std::string &id : ids) {
    const CitationRecord &r = corpus.Get(id);
    std::vector<NameVariant> names;
    for (std::size_t k = 1; k < r.authors.size(); ++k) {
      if (auto v = TryParseName(r.authors[k])) names.push_back(*v);
    }
    coauthors.push_back(std::move(names));
  }
  std::vector<std::vector<bool>> relation(ids.size(), std::vector<bool>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = 0; j < ids.size(); ++j) {
      for (const NameVariant &x : coauthors[i]) {
        for (const NameVariant &y : coauthors[j]) {
          if (NamesCompatible(x, y)) relation[i][j] = true;
        }
      }
    }
  }
  std::set<std::set<std::string>> out;
  for (const std::set<std::size_t> &cls : ClosureClasses(relation)) {
    std::set<std::string> named;
    for (std::size_t i : cls) named.insert(ids[i]);
    out.insert(std::move(named));
  }
  return out;
}

// Empty when `clusters` are pairwise disjoint and cover exactly `expected`;
// otherwise a description of the first violation.
inline std::string PartitionViolation(const std::vector<Cluster> &clusters,
                                      const std::set<std::string> &expected) {
  std::set<std::string> seen;
  for (const Cluster &c : clusters) {
    if (c.record_ids.empty()) return "empty cluster " + c.id;
    for (const std::string &id : c.record_ids) {
      if (!seen.insert(id).second) return "record " + id + " appears twice";
      if (!expected.contains(id)) return "unexpected record " + id;
    }
  }
  if (seen.size() != expected.size()) return "records missing from the output";
  return "";
}

}  // namespace namediss::testing

#endif  // NAMEDISS_TESTS_ORACLES_H_
