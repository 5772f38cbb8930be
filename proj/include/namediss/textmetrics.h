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

#ifndef NAMEDISS_TEXTMETRICS_H_
#define NAMEDISS_TEXTMETRICS_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace namediss {

// Edit distance over Unicode scalar values (insert, delete, substitute, all
// cost 1).
std::size_t Levenshtein(std::u32string_view a, std::u32string_view b);
std::size_t Levenshtein(std::string_view a, std::string_view b);

// 1 - distance / max length, in [0, 1]. Two empty strings are identical.
double Similarity(std::string_view a, std::string_view b);

// Porter (1980) suffix stripper for lowercase ASCII words. Words of length
// <= 2 and words with characters outside [a-z] are returned unchanged.
std::string PorterStem(std::string_view word);

// PorterStem applied until the output no longer changes. Porter is not
// idempotent on its own output ("agreed" -> "agre" -> "agr").
std::string StableStem(std::string_view word);

class StopWordList {
 public:
  using Words = std::set<std::string, std::less<>>;

  StopWordList() = default;
  explicit StopWordList(Words words);

  // The bundled English list.
  static StopWordList English();

  // One word per line; '#' starts a comment; blank lines ignored.
  static StopWordList Parse(std::istream &in);
  static StopWordList LoadFile(const std::string &path);

  bool Contains(std::string_view word) const;
  const Words &words() const { return words_; }
  std::size_t size() const { return words_.size(); }

 private:
  Words words_;
};

// Stemmed term -> positive frequency. Keys are lowercase, never stop-words
// and always their own stem.
class KeywordVector {
 public:
  using Terms = std::map<std::string, std::uint32_t>;

  KeywordVector() = default;

  const Terms &terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::uint32_t Count(std::string_view term) const;

  void Add(const std::string &term, std::uint32_t count = 1);

  // The k most frequent terms; ties broken by term order.
  std::vector<std::string> TopTerms(std::size_t k) const;

  bool operator==(const KeywordVector &) const = default;

 private:
  Terms terms_;
};

// Tokenizes on non-alphanumeric boundaries, case-folds, drops stop-words and
// tokens shorter than two characters, stems, then counts.
KeywordVector BuildVector(std::span<const std::string> titles,
                          const StopWordList &stopwords);

// Stemmed, stop-word filtered token sequence of one text (not deduplicated).
std::vector<std::string> KeywordTokens(std::string_view text,
                                       const StopWordList &stopwords);

// Cosine similarity; 0 when either vector is empty.
double VectorSimilarity(const KeywordVector &u, const KeywordVector &v);

}  // namespace namediss

#endif  // NAMEDISS_TEXTMETRICS_H_
