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

#include "namediss/clustering.h"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <fstream>

#include "namediss/error.h"
#include "namediss/unicode.h"
#include "namediss/union_find.h"

namespace namediss {

std::string ClusterIdFor(const std::set<std::string> &record_ids) {
  return record_ids.empty() ? "c:" : "c:" + *record_ids.begin();
}

void Cluster::AssignId() { id = ClusterIdFor(record_ids); }

// VenueMap.

namespace {

std::string Trimmed(const std::string &s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

bool ById(const Cluster &a, const Cluster &b) { return a.id < b.id; }

}  // namespace

VenueMap VenueMap::Parse(std::istream &in) {
  VenueMap map;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trimmed(line).empty()) continue;
    std::vector<std::string> fields;
    try {
      fields = SplitCsvLine(line);
    } catch (const std::exception &e) {
      throw ConfigError("venue map line " + std::to_string(line_no) + ": " +
                        e.what());
    }
    if (fields.size() != 2) {
      throw ConfigError("venue map line " + std::to_string(line_no) +
                        ": expected venue,discipline");
    }
    const std::string venue = Trimmed(fields[0]);
    const std::string label = Trimmed(fields[1]);
    if (line_no == 1 && FoldCase(venue) == "venue" &&
        FoldCase(label) == "discipline") {
      continue;
    }
    if (label.empty()) {
      throw ConfigError("venue map line " + std::to_string(line_no) +
                        ": empty discipline label");
    }
    map.Add(venue, label);
  }
  return map;
}

VenueMap VenueMap::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open venue map: " + path);
  return Parse(in);
}

void VenueMap::Add(const std::string &venue, const std::string &label) {
  if (label.empty()) throw ConfigError("empty discipline label for " + venue);
  entries_[FoldCase(Trimmed(venue))] = label;
}

const std::string &VenueMap::Lookup(const std::string &venue) const {
  const std::string key = FoldCase(Trimmed(venue));
  if (key.empty()) return default_label_;
  auto it = entries_.find(key);
  return it == entries_.end() ? default_label_ : it->second;
}

void VenueMap::set_default_label(std::string label) {
  if (label.empty()) throw ConfigError("empty default discipline label");
  default_label_ = std::move(label);
}

void Thresholds::Validate() const {
  auto in_unit = [](double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; };
  if (!in_unit(affiliation_similarity)) {
    throw ConfigError("affiliation similarity threshold must be in [0,1]");
  }
  if (!in_unit(title_similarity)) {
    throw ConfigError("title similarity threshold must be in [0,1]");
  }
  if (!in_unit(homepage_keyword_fraction) || homepage_keyword_fraction == 0.0) {
    throw ConfigError("homepage keyword fraction must be in (0,1]");
  }
  if (homepage_top_keywords <= 0) {
    throw ConfigError("homepage top keyword count must be positive");
  }
}

// Layer 1.

std::vector<Cluster> Layer1DisciplineClusters(const Corpus &corpus,
                                              const NameVariant &query,
                                              const VenueMap &venues) {
  std::map<std::string, Cluster> by_label;
  std::map<std::string, std::vector<NameVariant>> variants;
  for (const CitationRecord &r : corpus.records()) {
    std::optional<NameVariant> principal = TryParseName(r.principal());
    if (!principal || !NamesCompatible(*principal, query)) continue;
    const std::string label = r.discipline && !r.discipline->empty()
                                  ? *r.discipline
                                  : venues.Lookup(r.venue);
    Cluster &c = by_label[label];
    c.discipline = label;
    c.record_ids.insert(r.id);
    variants[label].push_back(std::move(*principal));
  }
  std::vector<Cluster> out;
  for (auto &[label, cluster] : by_label) {
    cluster.candidate_principals = DistinctVariants(std::move(variants[label]));
    cluster.AssignId();
    out.push_back(std::move(cluster));
  }
  std::sort(out.begin(), out.end(), ById);
  return out;
}

// Layer 2.

namespace {

std::vector<NameVariant> CoauthorVariants(const CitationRecord &r) {
  std::vector<NameVariant> out;
  for (std::size_t i = 1; i < r.authors.size(); ++i) {
    if (auto v = TryParseName(r.authors[i])) out.push_back(std::move(*v));
  }
  return out;
}

std::vector<NameVariant> PrincipalVariants(const std::set<std::string> &ids,
                                           const Corpus &corpus) {
  std::vector<NameVariant> out;
  for (const std::string &id : ids) {
    if (auto v = TryParseName(corpus.Get(id).principal())) {
      out.push_back(std::move(*v));
    }
  }
  return out;
}

}  // namespace

std::vector<Cluster> Layer2CoauthorSplit(const Cluster &cluster,
                                         const Corpus &corpus) {
  const std::vector<std::string> ids(cluster.record_ids.begin(),
                                     cluster.record_ids.end());
  std::vector<std::vector<NameVariant>> coauthors;
  coauthors.reserve(ids.size());
  for (const std::string &id : ids) {
    coauthors.push_back(CoauthorVariants(corpus.Get(id)));
  }

  UnionFind components(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (AnyCompatible(coauthors[i], coauthors[j])) components.Unite(i, j);
    }
  }

  std::vector<Cluster> out;
  for (const auto &group : components.Groups()) {
    Cluster sub;
    sub.discipline = cluster.discipline;
    for (std::size_t i : group) sub.record_ids.insert(ids[i]);
    sub.candidate_principals =
        DistinctVariants(PrincipalVariants(sub.record_ids, corpus));
    sub.AssignId();
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), ById);
  return out;
}

// Layer 3.

std::set<std::string> CollectAffiliations(const Cluster &cluster,
                                          const Corpus &corpus,
                                          const AffiliationResolver &resolver) {
  std::set<std::string> out;
  for (const std::string &id : cluster.record_ids) {
    const CitationRecord &r = corpus.Get(id);
    if (r.affiliation && !Trimmed(*r.affiliation).empty()) {
      out.insert(Trimmed(*r.affiliation));
      continue;
    }
    if (!r.publisher_url || r.publisher_url->empty()) continue;
    try {
      if (auto a = resolver.Resolve(*r.publisher_url); a && !Trimmed(*a).empty()) {
        out.insert(Trimmed(*a));
      }
    } catch (const std::exception &e) {
      spdlog::warn("affiliation lookup failed for {}: {}", *r.publisher_url,
                   e.what());
    }
  }
  return out;
}

namespace {

bool AffiliationsMatch(const std::vector<std::string> &a,
                       const std::vector<std::string> &b, double threshold) {
  for (const std::string &x : a) {
    for (const std::string &y : b) {
      if (Similarity(x, y) >= threshold) return true;
    }
  }
  return false;
}

// Unions `parts` into one cluster. The discipline of the first part wins.
Cluster MergeClusters(std::vector<Cluster> parts) {
  Cluster merged;
  merged.discipline = parts.front().discipline;
  std::vector<NameVariant> candidates;
  for (Cluster &part : parts) {
    merged.record_ids.insert(part.record_ids.begin(), part.record_ids.end());
    merged.affiliations.insert(part.affiliations.begin(), part.affiliations.end());
    merged.principal = merged.principal || part.principal;
    for (NameVariant &v : part.candidate_principals) {
      candidates.push_back(std::move(v));
    }
  }
  merged.candidate_principals = PromoteGroups(std::move(candidates));
  merged.AssignId();
  return merged;
}

}  // namespace

std::vector<Cluster> Layer3AffiliationMerge(std::vector<Cluster> clusters,
                                            const Corpus &corpus,
                                            const AffiliationResolver &resolver,
                                            const Thresholds &thresholds) {
  thresholds.Validate();
  std::sort(clusters.begin(), clusters.end(), ById);
  std::vector<std::vector<std::string>> folded(clusters.size());
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    std::set<std::string> found = CollectAffiliations(clusters[i], corpus, resolver);
    clusters[i].affiliations.insert(found.begin(), found.end());
    for (const std::string &a : clusters[i].affiliations) {
      folded[i].push_back(FoldCase(a));
    }
  }

  UnionFind merges(clusters.size());
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    for (std::size_t j = i + 1; j < clusters.size(); ++j) {
      if (AffiliationsMatch(folded[i], folded[j],
                            thresholds.affiliation_similarity) &&
          AnyCompatible(clusters[i].candidate_principals,
                        clusters[j].candidate_principals)) {
        merges.Unite(i, j);
      }
    }
  }

  std::vector<Cluster> out;
  for (const auto &group : merges.Groups()) {
    std::vector<Cluster> parts;
    for (std::size_t i : group) parts.push_back(std::move(clusters[i]));
    out.push_back(MergeClusters(std::move(parts)));
  }
  std::sort(out.begin(), out.end(), ById);
  return out;
}

// Layer 4.

namespace {

KeywordVector VectorFor(const Cluster &cluster, const Corpus &corpus,
                        const StopWordList &stopwords) {
  std::vector<std::string> titles;
  titles.reserve(cluster.record_ids.size());
  for (const std::string &id : cluster.record_ids) {
    titles.push_back(corpus.Get(id).title);
  }
  return BuildVector(titles, stopwords);
}

MergeResult Absorb(Cluster principal, std::vector<Cluster> others,
                   const std::vector<bool> &absorbed, const Corpus &corpus,
                   const StopWordList &stopwords) {
  std::vector<Cluster> parts;
  std::vector<Cluster> kept;
  parts.push_back(std::move(principal));
  for (std::size_t i = 0; i < others.size(); ++i) {
    (absorbed[i] ? parts : kept).push_back(std::move(others[i]));
  }
  MergeResult result;
  if (parts.size() == 1) {
    result.principal = std::move(parts.front());
  } else {
    result.principal = MergeClusters(std::move(parts));
    result.principal.vector = VectorFor(result.principal, corpus, stopwords);
  }
  result.principal.principal = true;
  std::sort(kept.begin(), kept.end(), ById);
  result.others = std::move(kept);
  return result;
}

}  // namespace

std::vector<Cluster> PrepareVectors(std::vector<Cluster> clusters,
                                    const Corpus &corpus,
                                    const StopWordList &stopwords) {
  for (Cluster &c : clusters) c.vector = VectorFor(c, corpus, stopwords);
  return clusters;
}

MergeResult Layer4TitleMerge(Cluster principal, std::vector<Cluster> others,
                             const Corpus &corpus,
                             const StopWordList &stopwords,
                             const Thresholds &thresholds) {
  thresholds.Validate();
  std::vector<std::pair<double, std::size_t>> order;
  for (std::size_t i = 0; i < others.size(); ++i) {
    order.emplace_back(VectorSimilarity(principal.vector, others[i].vector), i);
  }
  std::sort(order.begin(), order.end(), [&](const auto &x, const auto &y) {
    if (x.first != y.first) return x.first > y.first;
    return others[x.second].id < others[y.second].id;
  });

  std::vector<bool> absorbed(others.size(), false);
  for (const auto &[similarity, i] : order) {
    if (similarity < thresholds.title_similarity) break;
    if (AnyCompatible(principal.candidate_principals,
                      others[i].candidate_principals)) {
      spdlog::debug("title merge: {} into {} (similarity {:.3f})", others[i].id,
                    principal.id, similarity);
      absorbed[i] = true;
    }
  }
  return Absorb(std::move(principal), std::move(others), absorbed, corpus,
                stopwords);
}

std::string NormalizeUrl(std::string_view url) {
  std::string out(url);
  const auto scheme = out.find("://");
  if (scheme != std::string::npos) out.erase(0, scheme + 3);
  while (!out.empty() && out.back() == '/') out.pop_back();
  return out;
}

namespace {

bool MentionsName(const std::set<std::string> &tokens, const NameVariant &name) {
  for (const std::string &part : AlnumTokens(name.surname)) {
    if (!tokens.contains(part)) return false;
  }
  for (const GivenToken &t : name.given) {
    if (t.initial) continue;
    for (const std::string &part : AlnumTokens(t.text)) {
      if (!tokens.contains(part)) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::string> FindHomepage(const NameVariant &name,
                                        const KeywordVector &vector,
                                        const SearchProvider &search,
                                        const StopWordList &stopwords,
                                        const Thresholds &thresholds) {
  const std::vector<SearchResult> results = search.Search(name.raw + " homepage");
  const std::vector<std::string> top =
      vector.TopTerms(static_cast<std::size_t>(thresholds.homepage_top_keywords));
  const double needed =
      thresholds.homepage_keyword_fraction * static_cast<double>(top.size());

  const std::size_t limit = std::min(results.size(), kHomepageResultLimit);
  for (std::size_t i = 0; i < limit; ++i) {
    const SearchResult &result = results[i];
    const std::string text = result.title + " " + result.snippet;
    const std::vector<std::string> raw_tokens = AlnumTokens(text);
    const std::set<std::string> tokens(raw_tokens.begin(), raw_tokens.end());
    if (!tokens.contains("homepage") || !MentionsName(tokens, name)) continue;

    const std::vector<std::string> stemmed = KeywordTokens(text, stopwords);
    const std::set<std::string> keywords(stemmed.begin(), stemmed.end());
    const auto covered = std::count_if(top.begin(), top.end(), [&](const std::string &t) {
      return keywords.contains(t);
    });
    if (static_cast<double>(covered) >= needed) return NormalizeUrl(result.url);
  }
  return std::nullopt;
}

MergeResult Layer4HomepageMerge(Cluster principal, std::vector<Cluster> others,
                                const Corpus &corpus,
                                const SearchProvider &search,
                                const StopWordList &stopwords,
                                const Thresholds &thresholds) {
  thresholds.Validate();
  std::vector<bool> absorbed(others.size(), false);
  try {
    std::optional<std::string> home;
    if (!principal.candidate_principals.empty()) {
      home = FindHomepage(principal.candidate_principals.front(), principal.vector,
                          search, stopwords, thresholds);
    }
    if (!home) {
      std::sort(others.begin(), others.end(), ById);
      principal.principal = true;
      return MergeResult{std::move(principal), std::move(others)};
    }
    for (std::size_t i = 0; i < others.size(); ++i) {
      for (const NameVariant &name : others[i].candidate_principals) {
        std::optional<std::string> other_home =
            FindHomepage(name, others[i].vector, search, stopwords, thresholds);
        if (!other_home) continue;
        if (*other_home == *home) {
          spdlog::debug("homepage merge: {} into {} ({})", others[i].id,
                        principal.id, *home);
          absorbed[i] = true;
        }
        break;
      }
    }
  } catch (const ProviderUnavailable &e) {
    spdlog::warn("homepage step skipped: {}", e.what());
    std::sort(others.begin(), others.end(), ById);
    principal.principal = true;
    return MergeResult{std::move(principal), std::move(others)};
  }
  return Absorb(std::move(principal), std::move(others), absorbed, corpus,
                stopwords);
}

}  // namespace namediss
