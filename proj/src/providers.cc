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

#include "namediss/providers.h"

#include <boost/tokenizer.hpp>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "namediss/error.h"
#include "namediss/unicode.h"

namespace namediss {

std::vector<std::string> SplitCsvLine(const std::string &line) {
  // No escape character: quotes are doubled inside quoted fields.
  boost::escaped_list_separator<char> separator('\0', ',', '"');
  boost::tokenizer<boost::escaped_list_separator<char>> tokens(line, separator);
  std::vector<std::string> fields;
  for (const std::string &field : tokens) fields.push_back(field);
  return fields;
}

namespace {

std::string TrimCopy(const std::string &s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string QueryKey(const std::string &query) {
  std::string out;
  bool space = false;
  for (char c : FoldCase(query)) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      space = !out.empty();
      continue;
    }
    if (space) out.push_back(' ');
    space = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace

FixtureAffiliationResolver FixtureAffiliationResolver::Parse(std::istream &in) {
  std::map<std::string, std::string> table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (TrimCopy(line).empty()) continue;
    std::vector<std::string> fields;
    try {
      fields = SplitCsvLine(line);
    } catch (const boost::escaped_list_error &e) {
      throw ConfigError("affiliation fixture line " + std::to_string(line_no) +
                        ": " + e.what());
    }
    if (fields.size() != 2) {
      throw ConfigError("affiliation fixture line " + std::to_string(line_no) +
                        ": expected 2 fields");
    }
    const std::string url = TrimCopy(fields[0]);
    const std::string affiliation = TrimCopy(fields[1]);
    if (line_no == 1 && url == "publisher_url" && affiliation == "affiliation") {
      continue;
    }
    table[url] = affiliation;
  }
  return FixtureAffiliationResolver(std::move(table));
}

FixtureAffiliationResolver FixtureAffiliationResolver::LoadFile(
    const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open affiliation fixture: " + path);
  return Parse(in);
}

std::optional<std::string> FixtureAffiliationResolver::Resolve(
    const std::string &url) const {
  auto it = table_.find(url);
  if (it == table_.end() || it->second.empty()) return std::nullopt;
  return it->second;
}

std::vector<SearchResult> UnavailableSearchProvider::Search(
    const std::string &query) const {
  throw ProviderUnavailable("search provider unavailable for query: " + query);
}

FixtureSearchProvider FixtureSearchProvider::Parse(std::string_view json_text) {
  using json = nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ConfigError(std::string("malformed search fixture: ") + e.what());
  }
  if (!doc.is_array()) throw ConfigError("search fixture must be a JSON array");
  FixtureSearchProvider provider;
  try {
    for (const json &entry : doc) {
      std::vector<SearchResult> results;
      for (const json &r : entry.at("results")) {
        results.push_back(SearchResult{r.value("title", ""), r.at("url").get<std::string>(),
                                       r.value("snippet", "")});
      }
      provider.Add(entry.at("query").get<std::string>(), std::move(results));
    }
  } catch (const json::exception &e) {
    throw ConfigError(std::string("bad search fixture entry: ") + e.what());
  }
  return provider;
}

FixtureSearchProvider FixtureSearchProvider::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open search fixture: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

void FixtureSearchProvider::Add(const std::string &query,
                                std::vector<SearchResult> results) {
  results_[QueryKey(query)] = std::move(results);
}

std::vector<SearchResult> FixtureSearchProvider::Search(
    const std::string &query) const {
  auto it = results_.find(QueryKey(query));
  if (it == results_.end()) return {};
  return it->second;
}

}  // namespace namediss
