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

#ifndef NAMEDISS_PROVIDERS_H_
#define NAMEDISS_PROVIDERS_H_

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace namediss {

// Maps a record's publisher URL to an affiliation string. Implementations must
// be safe for concurrent calls.
class AffiliationResolver {
 public:
  virtual ~AffiliationResolver() = default;

  // nullopt when nothing is known. May throw ProviderUnavailable.
  virtual std::optional<std::string> Resolve(const std::string &url) const = 0;
};

class NullAffiliationResolver : public AffiliationResolver {
 public:
  std::optional<std::string> Resolve(const std::string &) const override {
    return std::nullopt;
  }
};

// CSV `publisher_url,affiliation`. An optional header row with exactly those
// column names is skipped.
class FixtureAffiliationResolver : public AffiliationResolver {
 public:
  explicit FixtureAffiliationResolver(std::map<std::string, std::string> table)
      : table_(std::move(table)) {}

  static FixtureAffiliationResolver Parse(std::istream &in);
  static FixtureAffiliationResolver LoadFile(const std::string &path);

  std::optional<std::string> Resolve(const std::string &url) const override;

 private:
  std::map<std::string, std::string> table_;
};

struct SearchResult {
  std::string title;
  std::string url;
  std::string snippet;
};

// Web search in organic rank order. Implementations must be safe for
// concurrent calls.
class SearchProvider {
 public:
  virtual ~SearchProvider() = default;

  // Throws ProviderUnavailable when the backend cannot be reached.
  virtual std::vector<SearchResult> Search(const std::string &query) const = 0;
};

class NullSearchProvider : public SearchProvider {
 public:
  std::vector<SearchResult> Search(const std::string &) const override {
    return {};
  }
};

// Always throws ProviderUnavailable.
class UnavailableSearchProvider : public SearchProvider {
 public:
  std::vector<SearchResult> Search(const std::string &query) const override;
};

// JSON array of {query, results: [{title, url, snippet}]}. Queries match
// case-insensitively with whitespace collapsed; unknown queries return no
// results.
class FixtureSearchProvider : public SearchProvider {
 public:
  FixtureSearchProvider() = default;

  static FixtureSearchProvider Parse(std::string_view json_text);
  static FixtureSearchProvider LoadFile(const std::string &path);

  void Add(const std::string &query, std::vector<SearchResult> results);

  std::vector<SearchResult> Search(const std::string &query) const override;

 private:
  std::map<std::string, std::vector<SearchResult>> results_;
};

// Parses one CSV record (RFC 4180 quoting).
std::vector<std::string> SplitCsvLine(const std::string &line);

}  // namespace namediss

#endif  // NAMEDISS_PROVIDERS_H_
