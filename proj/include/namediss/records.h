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

#ifndef NAMEDISS_RECORDS_H_
#define NAMEDISS_RECORDS_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace namediss {

enum class RecordSource { kDblp, kJsonl, kOther };

// One bibliographic item. authors[0] is the principal author; the rest are
// co-authors.
struct CitationRecord {
  std::string id;
  std::string title;
  std::vector<std::string> authors;
  std::string venue;
  std::optional<int> year;
  std::optional<std::string> affiliation;
  std::optional<std::string> publisher_url;
  // Ground-truth discipline override consulted before the venue map.
  std::optional<std::string> discipline;
  // Gold author label; only the evaluation code reads it.
  std::optional<std::string> author_key;
  RecordSource source = RecordSource::kOther;

  const std::string &principal() const { return authors.front(); }

  // Field equality ignoring `source`.
  bool SameFields(const CitationRecord &other) const;
};

// An immutable, id-indexed list of records. Safe to share across threads
// once built.
class Corpus {
 public:
  Corpus() = default;

  // Throws DataError on duplicate ids, empty titles or empty author lists.
  explicit Corpus(std::vector<CitationRecord> records);

  const std::vector<CitationRecord> &records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  // Returns nullptr when the id is unknown.
  const CitationRecord *Find(std::string_view id) const;

  // Throws DataError when the id is unknown.
  const CitationRecord &Get(std::string_view id) const;

 private:
  std::vector<CitationRecord> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Reads one JSON object per non-blank line. Errors carry the 1-based line
// number or the offending record id.
Corpus IngestJsonl(std::istream &in);

// Reads the article/inproceedings subset of the DBLP XML format.
Corpus IngestDblpXml(std::string_view document);

// Canonical interchange format. Absent optional fields are omitted.
void WriteJsonl(const Corpus &corpus, std::ostream &out);

// Loads a corpus from a file, choosing the importer by extension (.xml is
// DBLP, anything else JSONL).
Corpus LoadCorpusFile(const std::string &path);

}  // namespace namediss

#endif  // NAMEDISS_RECORDS_H_
