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

#ifndef NAMEDISS_CLUSTERING_H_
#define NAMEDISS_CLUSTERING_H_

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "namediss/names.h"
#include "namediss/providers.h"
#include "namediss/records.h"
#include "namediss/textmetrics.h"

namespace namediss {

// A set of citation records believed to share one principal author.
//
// Cluster ids are derived from content: "c:" followed by the smallest member
// record id. Clusters in one layer's output are disjoint, so ids are unique
// within it.
struct Cluster {
  std::string id;
  std::set<std::string> record_ids;
  std::string discipline;
  // Principal-author name variants observed in the cluster, most specific
  // first.
  std::vector<NameVariant> candidate_principals;
  std::set<std::string> affiliations;
  KeywordVector vector;
  // Set on the user-endorsed cluster from the second checkpoint on.
  bool principal = false;

  // Recomputes `id` from `record_ids`.
  void AssignId();
};

std::string ClusterIdFor(const std::set<std::string> &record_ids);

// Venue -> discipline label, matched case-insensitively.
class VenueMap {
 public:
  static constexpr const char *kUnknown = "unknown";

  VenueMap() = default;

  // CSV `venue,discipline`; an optional `venue,discipline` header is skipped.
  // Throws ConfigError on malformed rows or empty labels.
  static VenueMap Parse(std::istream &in);
  static VenueMap LoadFile(const std::string &path);

  void Add(const std::string &venue, const std::string &label);

  // Empty or unmapped venues get the default label.
  const std::string &Lookup(const std::string &venue) const;

  const std::map<std::string, std::string> &entries() const { return entries_; }
  const std::string &default_label() const { return default_label_; }
  void set_default_label(std::string label);

 private:
  std::map<std::string, std::string> entries_;
  std::string default_label_ = kUnknown;
};

// Merge thresholds. Defaults are tuning choices, not derived values.
struct Thresholds {
  double affiliation_similarity = 0.75;
  double title_similarity = 0.50;
  double homepage_keyword_fraction = 0.5;
  int homepage_top_keywords = 10;

  // Throws ConfigError when a value is out of range.
  void Validate() const;
};

// Layer 1: keeps records whose principal author is compatible with `query`
// and groups them by discipline (record override, then venue map, then the
// default label). Returns clusters sorted by id; empty when nothing matches.
std::vector<Cluster> Layer1DisciplineClusters(const Corpus &corpus,
                                              const NameVariant &query,
                                              const VenueMap &venues);

// Layer 2: connected components of the "shares a compatible co-author"
// relation among the cluster's records.
std::vector<Cluster> Layer2CoauthorSplit(const Cluster &cluster,
                                         const Corpus &corpus);

// Layer 3: merges clusters that have an affiliation pair with similarity at
// or above the threshold and a compatible pair of candidate principals. The
// merge relation is closed transitively. Candidate principals of every output
// cluster are collapsed to their most specific variants.
std::vector<Cluster> Layer3AffiliationMerge(std::vector<Cluster> clusters,
                                            const Corpus &corpus,
                                            const AffiliationResolver &resolver,
                                            const Thresholds &thresholds);

// Affiliation strings for one cluster: the recorded affiliation, else the
// resolver's answer for the publisher URL. Resolver failures are logged and
// skipped.
std::set<std::string> CollectAffiliations(const Cluster &cluster,
                                          const Corpus &corpus,
                                          const AffiliationResolver &resolver);

// Builds each cluster's keyword vector from its member titles.
std::vector<Cluster> PrepareVectors(std::vector<Cluster> clusters,
                                    const Corpus &corpus,
                                    const StopWordList &stopwords);

struct MergeResult {
  Cluster principal;
  std::vector<Cluster> others;
};

// Layer 4, titles: absorbs every other cluster whose vector similarity to the
// principal's is at or above the threshold and that has a candidate principal
// compatible with the principal's. One pass, in descending similarity (ties by
// id), against the principal's vector as it was on entry; the vector is
// rebuilt once at the end.
MergeResult Layer4TitleMerge(Cluster principal, std::vector<Cluster> others,
                             const Corpus &corpus,
                             const StopWordList &stopwords,
                             const Thresholds &thresholds);

// Layer 4, homepages: looks for a homepage among the first ten results of
// "<name> homepage" for the principal and for each other cluster, and
// absorbs the clusters whose homepage URL equals the principal's. A missing
// homepage or an unavailable provider leaves everything untouched.
MergeResult Layer4HomepageMerge(Cluster principal, std::vector<Cluster> others,
                                const Corpus &corpus,
                                const SearchProvider &search,
                                const StopWordList &stopwords,
                                const Thresholds &thresholds);

// Number of search results inspected per homepage query.
inline constexpr std::size_t kHomepageResultLimit = 10;

// Returns the URL of the first of the top ten results that mentions
// "homepage", mentions `name` and covers enough of the cluster's top
// keywords; nullopt otherwise. Throws ProviderUnavailable.
std::optional<std::string> FindHomepage(const NameVariant &name,
                                        const KeywordVector &vector,
                                        const SearchProvider &search,
                                        const StopWordList &stopwords,
                                        const Thresholds &thresholds);

// Drops the scheme and trailing slashes.
std::string NormalizeUrl(std::string_view url);

}  // namespace namediss

#endif  // NAMEDISS_CLUSTERING_H_
