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

#include "namediss/records.h"

#include <expat.h>

#include <fstream>
#include <memory>
#include <sstream>

#include "json.hpp"
#include "namediss/error.h"

namespace namediss {

using json = nlohmann::json;

bool CitationRecord::SameFields(const CitationRecord &other) const {
  return id == other.id && title == other.title && authors == other.authors &&
         venue == other.venue && year == other.year &&
         affiliation == other.affiliation &&
         publisher_url == other.publisher_url &&
         discipline == other.discipline && author_key == other.author_key;
}

Corpus::Corpus(std::vector<CitationRecord> records)
    : records_(std::move(records)) {
  index_.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const CitationRecord &r = records_[i];
    if (r.title.empty()) throw DataError("record " + r.id + ": empty title");
    if (r.authors.empty()) {
      throw DataError("record " + r.id + ": empty authors");
    }
    if (!index_.emplace(r.id, i).second) {
      throw DataError("duplicate record id: " + r.id);
    }
  }
}

const CitationRecord *Corpus::Find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &records_[it->second];
}

const CitationRecord &Corpus::Get(std::string_view id) const {
  const CitationRecord *r = Find(id);
  if (r == nullptr) throw DataError("unknown record id: " + std::string(id));
  return *r;
}

namespace {

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

std::optional<std::string> OptionalString(const json &obj, const char *key,
                                          std::size_t line_no) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw DataError("line " + std::to_string(line_no) + ": field '" + key +
                    "' must be a string");
  }
  return it->get<std::string>();
}

CitationRecord RecordFromJson(const json &obj, std::size_t line_no) {
  const std::string where = "line " + std::to_string(line_no);
  if (!obj.is_object()) throw DataError(where + ": expected a JSON object");
  CitationRecord r;
  r.source = RecordSource::kJsonl;

  auto id = obj.find("id");
  if (id == obj.end() || !id->is_string()) {
    throw DataError(where + ": missing string field 'id'");
  }
  r.id = id->get<std::string>();

  auto title = obj.find("title");
  if (title == obj.end() || !title->is_string()) {
    throw DataError(where + ": record " + r.id + ": missing string 'title'");
  }
  r.title = title->get<std::string>();
  if (r.title.empty()) throw DataError(where + ": record " + r.id + ": empty title");

  auto authors = obj.find("authors");
  if (authors == obj.end() || !authors->is_array()) {
    throw DataError(where + ": record " + r.id + ": missing array 'authors'");
  }
  for (const json &a : *authors) {
    if (!a.is_string()) {
      throw DataError(where + ": record " + r.id + ": authors must be strings");
    }
    r.authors.push_back(a.get<std::string>());
  }
  if (r.authors.empty()) {
    throw DataError(where + ": record " + r.id + ": empty authors");
  }

  r.venue = OptionalString(obj, "venue", line_no).value_or("");
  auto year = obj.find("year");
  if (year != obj.end() && !year->is_null()) {
    if (!year->is_number_integer()) {
      throw DataError(where + ": record " + r.id + ": year must be an integer");
    }
    r.year = year->get<int>();
  }
  r.affiliation = OptionalString(obj, "affiliation", line_no);
  r.publisher_url = OptionalString(obj, "publisher_url", line_no);
  r.discipline = OptionalString(obj, "discipline", line_no);
  r.author_key = OptionalString(obj, "author_key", line_no);
  return r;
}

}  // namespace

Corpus IngestJsonl(std::istream &in) {
  std::vector<CitationRecord> records;
  std::unordered_map<std::string, std::size_t> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error &e) {
      throw DataError("line " + std::to_string(line_no) +
                      ": malformed JSON: " + e.what());
    }
    CitationRecord r = RecordFromJson(obj, line_no);
    if (!seen.emplace(r.id, line_no).second) {
      throw DataError("line " + std::to_string(line_no) +
                      ": duplicate record id: " + r.id);
    }
    records.push_back(std::move(r));
  }
  return Corpus(std::move(records));
}

void WriteJsonl(const Corpus &corpus, std::ostream &out) {
  for (const CitationRecord &r : corpus.records()) {
    json obj = {{"id", r.id}, {"title", r.title}, {"authors", r.authors}};
    if (!r.venue.empty()) obj["venue"] = r.venue;
    if (r.year) obj["year"] = *r.year;
    if (r.affiliation) obj["affiliation"] = *r.affiliation;
    if (r.publisher_url) obj["publisher_url"] = *r.publisher_url;
    if (r.discipline) obj["discipline"] = *r.discipline;
    if (r.author_key) obj["author_key"] = *r.author_key;
    out << obj.dump() << '\n';
  }
}

// DBLP XML import.

namespace {

enum class Field { kNone, kAuthor, kTitle, kVenue, kYear, kEe };

struct DblpParseState {
  XML_Parser parser = nullptr;
  std::vector<CitationRecord> records;
  std::unordered_map<std::string, bool> seen;

  // Depth of the open publication element, 0 when outside one.
  int pub_depth = 0;
  int depth = 0;
  CitationRecord current;
  std::string current_tag;
  Field field = Field::kNone;
  int field_depth = 0;
  std::string text;
  bool have_ee = false;
  std::string error;
};

bool IsPublication(std::string_view name) {
  return name == "article" || name == "inproceedings";
}

Field FieldFor(std::string_view name) {
  if (name == "author") return Field::kAuthor;
  if (name == "title") return Field::kTitle;
  if (name == "journal" || name == "booktitle") return Field::kVenue;
  if (name == "year") return Field::kYear;
  if (name == "ee") return Field::kEe;
  return Field::kNone;
}

std::string Trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

void Fail(DblpParseState *state, std::string message) {
  if (state->error.empty()) state->error = std::move(message);
  XML_StopParser(state->parser, XML_FALSE);
}

void XMLCALL OnStart(void *data, const XML_Char *name, const XML_Char **attrs) {
  auto *state = static_cast<DblpParseState *>(data);
  ++state->depth;
  std::string_view tag(name);
  if (state->pub_depth == 0) {
    if (!IsPublication(tag)) return;
    state->pub_depth = state->depth;
    state->current = CitationRecord();
    state->current.source = RecordSource::kDblp;
    state->current_tag = std::string(tag);
    state->have_ee = false;
    for (int i = 0; attrs[i] != nullptr; i += 2) {
      if (std::string_view(attrs[i]) == "key") state->current.id = attrs[i + 1];
    }
    return;
  }
  // Nested markup inside a field (e.g. <i> in titles) contributes text only.
  if (state->field != Field::kNone) return;
  if (state->depth != state->pub_depth + 1) return;
  state->field = FieldFor(tag);
  state->field_depth = state->depth;
  state->text.clear();
}

void FinishField(DblpParseState *state) {
  std::string value = Trim(state->text);
  CitationRecord &r = state->current;
  switch (state->field) {
    case Field::kAuthor:
      if (!value.empty()) r.authors.push_back(value);
      break;
    case Field::kTitle:
      r.title = value;
      break;
    case Field::kVenue:
      if (r.venue.empty()) r.venue = value;
      break;
    case Field::kYear:
      try {
        std::size_t used = 0;
        int year = std::stoi(value, &used);
        if (used == value.size()) r.year = year;
      } catch (const std::exception &) {
      }
      break;
    case Field::kEe:
      if (!state->have_ee && !value.empty()) {
        r.publisher_url = value;
        state->have_ee = true;
      }
      break;
    case Field::kNone:
      break;
  }
}

void XMLCALL OnEnd(void *data, const XML_Char * /*name*/) {
  auto *state = static_cast<DblpParseState *>(data);
  if (state->field != Field::kNone && state->depth == state->field_depth) {
    FinishField(state);
    state->field = Field::kNone;
  }
  if (state->pub_depth != 0 && state->depth == state->pub_depth) {
    CitationRecord &r = state->current;
    const std::string key = r.id.empty() ? "(no key)" : r.id;
    if (r.id.empty()) {
      Fail(state, state->current_tag + " element without key attribute");
    } else if (r.title.empty()) {
      Fail(state, "publication " + key + ": missing title");
    } else if (r.authors.empty()) {
      Fail(state, "publication " + key + ": missing authors");
    } else if (!state->seen.emplace(r.id, true).second) {
      Fail(state, "duplicate record id: " + r.id);
    } else {
      state->records.push_back(std::move(r));
    }
    state->pub_depth = 0;
  }
  --state->depth;
}

void XMLCALL OnText(void *data, const XML_Char *s, int len) {
  auto *state = static_cast<DblpParseState *>(data);
  if (state->field != Field::kNone) state->text.append(s, len);
}

struct ParserDeleter {
  void operator()(XML_ParserStruct *p) const { XML_ParserFree(p); }
};

}  // namespace

Corpus IngestDblpXml(std::string_view document) {
  std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(
      XML_ParserCreate("UTF-8"));
  DblpParseState state;
  state.parser = parser.get();
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), OnStart, OnEnd);
  XML_SetCharacterDataHandler(parser.get(), OnText);

  const XML_Status status =
      XML_Parse(parser.get(), document.data(),
                static_cast<int>(document.size()), XML_TRUE);
  if (!state.error.empty()) throw DataError(state.error);
  if (status != XML_STATUS_OK) {
    std::ostringstream msg;
    msg << "malformed XML at byte offset "
        << XML_GetCurrentByteIndex(parser.get()) << ": "
        << XML_ErrorString(XML_GetErrorCode(parser.get()));
    throw DataError(msg.str());
  }
  return Corpus(std::move(state.records));
}

Corpus LoadCorpusFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open corpus file: " + path);
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".xml") == 0) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return IngestDblpXml(buffer.str());
  }
  return IngestJsonl(in);
}

}  // namespace namediss
