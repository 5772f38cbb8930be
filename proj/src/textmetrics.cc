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

#include "namediss/textmetrics.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "namediss/error.h"
#include "namediss/unicode.h"

namespace namediss {

extern const char kEnglishStopWords[];

std::size_t Levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // Single row over the shorter string.
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + cost});
      diag = up;
    }
  }
  return row[b.size()];
}

std::size_t Levenshtein(std::string_view a, std::string_view b) {
  return Levenshtein(ToCodePoints(a), ToCodePoints(b));
}

double Similarity(std::string_view a, std::string_view b) {
  const std::u32string ca = ToCodePoints(a);
  const std::u32string cb = ToCodePoints(b);
  const std::size_t longest = std::max(ca.size(), cb.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(Levenshtein(ca, cb)) /
                   static_cast<double>(longest);
}

// Stop-words.

StopWordList::StopWordList(Words words) : words_(std::move(words)) {}

StopWordList StopWordList::English() {
  std::istringstream in(kEnglishStopWords);
  return Parse(in);
}

StopWordList StopWordList::Parse(std::istream &in) {
  Words words;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    words.insert(FoldCase(line.substr(begin, end - begin + 1)));
  }
  return StopWordList(std::move(words));
}

StopWordList StopWordList::LoadFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open stop-word file: " + path);
  return Parse(in);
}

bool StopWordList::Contains(std::string_view word) const {
  return words_.find(word) != words_.end();
}

// Keyword vectors.

std::uint32_t KeywordVector::Count(std::string_view term) const {
  auto it = terms_.find(std::string(term));
  return it == terms_.end() ? 0 : it->second;
}

void KeywordVector::Add(const std::string &term, std::uint32_t count) {
  if (count == 0) return;
  terms_[term] += count;
}

std::vector<std::string> KeywordVector::TopTerms(std::size_t k) const {
  std::vector<std::pair<std::string, std::uint32_t>> ranked(terms_.begin(),
                                                            terms_.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto &x, const auto &y) { return x.second > y.second; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ranked.size() && i < k; ++i) {
    out.push_back(ranked[i].first);
  }
  return out;
}

namespace {

std::size_t CodePointLength(const std::string &s) {
  return ToCodePoints(s).size();
}

}  // namespace

std::vector<std::string> KeywordTokens(std::string_view text,
                                       const StopWordList &stopwords) {
  std::vector<std::string> out;
  for (const std::string &token : AlnumTokens(text)) {
    if (CodePointLength(token) < 2 || stopwords.Contains(token)) continue;
    std::string stem = StableStem(token);
    // A stem can shrink below two characters or collide with a stop-word
    // ("ones" -> "on").
    if (CodePointLength(stem) < 2 || stopwords.Contains(stem)) continue;
    out.push_back(std::move(stem));
  }
  return out;
}

KeywordVector BuildVector(std::span<const std::string> titles,
                          const StopWordList &stopwords) {
  KeywordVector vector;
  for (const std::string &title : titles) {
    for (const std::string &term : KeywordTokens(title, stopwords)) {
      vector.Add(term);
    }
  }
  return vector;
}

double VectorSimilarity(const KeywordVector &u, const KeywordVector &v) {
  if (u.empty() || v.empty()) return 0.0;
  double dot = 0.0;
  double nu = 0.0;
  double nv = 0.0;
  for (const auto &[term, count] : u.terms()) {
    nu += static_cast<double>(count) * count;
    dot += static_cast<double>(count) * v.Count(term);
  }
  for (const auto &[term, count] : v.terms()) {
    nv += static_cast<double>(count) * count;
  }
  const double cosine = dot / (std::sqrt(nu) * std::sqrt(nv));
  return std::clamp(cosine, 0.0, 1.0);
}

}  // namespace namediss
