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

#include "support/fixtures.h"

#include <array>
#include <cstdio>
#include <map>
#include <optional>

namespace namediss::testing {

CitationRecord MakeRecord(std::string id, std::string title,
                          std::vector<std::string> authors, std::string venue) {
  CitationRecord r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.authors = std::move(authors);
  r.venue = std::move(venue);
  r.source = RecordSource::kJsonl;
  return r;
}

VenueMap FixtureVenues() {
  VenueMap venues;
  for (const char *v : {"ICWE", "WWW", "CAiSE", "BPM", "VLDB", "ICSOC"}) {
    venues.Add(v, "CS");
  }
  for (const char *v : {"Phys. Rev. B", "Nuclear Physics B", "J. Appl. Phys."}) {
    venues.Add(v, "Physics");
  }
  return venues;
}

namespace {

constexpr std::array<const char *, 11> kCsCoauthors = {
    "Fabio Casati",     "Florian Daniel",   "Cinzia Cappiello", "Maristella Matera",
    "Aliaksandr Birukou", "Marcos Baez",    "Maurizio Marchese", "Stefano Soi",
    "Carlos Rodriguez", "Jorge Parra",      "Muhammad Chowdhury"};

constexpr std::array<const char *, 11> kPhysicsCoauthors = {
    "Luca Rossi",     "Giulia Bianchi", "Marco Ferrari", "Sara Esposito",
    "Paolo Romano",   "Anna Colombo",   "Davide Ricci",  "Elena Marino",
    "Franco Greco",   "Chiara Bruno",   "Roberto Gallo"};

constexpr std::array<const char *, 10> kCsTitles = {
    "Mashup composition for research evaluation",
    "Domain specific mashup tools for end users",
    "Web service composition with user feedback",
    "Research evaluation mashups on the web",
    "Component based mashup platform design",
    "End user development of web mashups",
    "Citation data integration for mashups",
    "Bibliometric indicators in mashup tools",
    "Interactive mashup editors for end users",
    "Web data sources for research evaluation"};

constexpr std::array<const char *, 10> kPhysicsTitles = {
    "Phonon transport in layered semiconductors",
    "Spin relaxation in quantum wells",
    "Superconducting gap symmetry in thin films",
    "Electron correlation in transition metal oxides",
    "Thermal conductivity of graphene ribbons",
    "Magnetic ordering in frustrated lattices",
    "Optical absorption of doped semiconductors",
    "Quantum dot spectroscopy at low temperature",
    "Band structure of strained silicon",
    "Neutron scattering from spin glasses"};

}  // namespace

Corpus MixedCitationCorpus() {
  std::vector<CitationRecord> records;
  const std::array<const char *, 3> cs_venues = {"ICWE", "WWW", "CAiSE"};
  const std::array<const char *, 3> phys_venues = {"Phys. Rev. B", "Nuclear Physics B",
                                                   "J. Appl. Phys."};
  for (int i = 0; i < 10; ++i) {
    CitationRecord a = MakeRecord("a" + std::to_string(i), kCsTitles[i],
                                  {"M. Imran", kCsCoauthors[i], kCsCoauthors[i + 1]},
                                  cs_venues[i % 3]);
    a.year = 2008 + i;
    a.author_key = "imran_a";
    records.push_back(std::move(a));
    CitationRecord b = MakeRecord(
        "b" + std::to_string(i), kPhysicsTitles[i],
        {"M. Imran", kPhysicsCoauthors[i], kPhysicsCoauthors[i + 1]}, phys_venues[i % 3]);
    b.year = 2005 + i;
    b.author_key = "imran_b";
    records.push_back(std::move(b));
  }
  return Corpus(std::move(records));
}

Corpus SplitCitationCorpus() {
  const std::array<const char *, 3> variants = {"Muhammad Imran", "M. Imran", "Imran, M."};
  const std::array<const char *, 3> venues = {"ICWE", "BPM", "ICSOC"};
  std::vector<CitationRecord> records;
  for (int i = 0; i < 12; ++i) {
    char id[24];
    std::snprintf(id, sizeof(id), "s%02d", i);
    CitationRecord r = MakeRecord(
        id, kCsTitles[i % kCsTitles.size()],
        {variants[i % 3], kCsCoauthors[i % 11], kCsCoauthors[(i + 1) % 11]},
        venues[i % 3]);
    r.author_key = "imran_m";
    records.push_back(std::move(r));
  }
  return Corpus(std::move(records));
}

Corpus LayeredCorpus() {
  std::vector<CitationRecord> records;
  auto add = [&](std::string id, std::string title, std::vector<std::string> authors,
                 std::string venue, std::optional<std::string> affiliation,
                 std::string key) {
    CitationRecord r = MakeRecord(std::move(id), std::move(title), std::move(authors),
                                  std::move(venue));
    r.affiliation = std::move(affiliation);
    r.author_key = std::move(key);
    records.push_back(std::move(r));
  };
  // g1: co-authors Casati/Daniel.
  add("l01", "Mashup composition for research evaluation",
      {"Muhammad Imran", "Fabio Casati"}, "ICWE", "University of Trento", "imran_m");
  add("l02", "Research evaluation mashups on the web",
      {"M. Imran", "Fabio Casati", "Florian Daniel"}, "WWW", std::nullopt, "imran_m");
  // g2: co-author Baez only; affiliation with department.
  add("l03", "Domain specific mashup tools for research evaluation",
      {"M. Imran", "Marcos Baez"}, "CAiSE", "University of Trento, DISI", "imran_m");
  add("l04", "Mashup tools for end users", {"Imran, M.", "Marcos Baez"}, "BPM",
      std::nullopt, "imran_m");
  // g3: isolated co-author, overlapping title vocabulary.
  add("l05", "Research evaluation with mashup tools", {"M. Imran", "Stefano Soi"},
      "ICWE", std::nullopt, "imran_m");
  // g4: isolated, unrelated vocabulary; joined by homepage only.
  add("l06", "Crisis informatics on social media streams", {"M. Imran", "Carlos Castillo"},
      "WWW", std::nullopt, "imran_m");
  // Distractor with the same abbreviated name.
  add("l07", "Query optimization in column stores", {"Malik Imran", "Luca Rossi"},
      "VLDB", "University of Milan", "imran_k");
  add("l08", "Index structures for column stores", {"M. Imran", "Luca Rossi"}, "VLDB",
      std::nullopt, "imran_k");
  // Outlier discipline.
  add("l09", "Spin relaxation in quantum wells", {"M. Imran", "Giulia Bianchi"},
      "Phys. Rev. B", std::nullopt, "imran_p");
  return Corpus(std::move(records));
}

std::shared_ptr<FixtureSearchProvider> LayeredSearch() {
  auto search = std::make_shared<FixtureSearchProvider>();
  const SearchResult home{"Muhammad Imran homepage",
                          "https://example.org/~imran/",
                          "Homepage of Muhammad Imran: mashup tools, research evaluation, "
                          "web composition for end users, crisis informatics, "
                          "social media"};
  search->Add("Muhammad Imran homepage", {home});
  // g4's own candidate is "M. Imran"; its vocabulary is crisis/social media.
  search->Add("M. Imran homepage",
              {SearchResult{"M. Imran homepage", "http://example.org/~imran",
                            "M. Imran homepage: crisis informatics on social media streams"}});
  return search;
}

namespace {

constexpr std::array<const char *, 7> kPrincipalPool = {
    "M. Imran", "Muhammad Imran", "Malik Imran", "Imran, M.", "M. A. Imran",
    "Imran",    "Mehmood Imran"};
constexpr std::array<const char *, 9> kCoauthorPool = {
    "F. Casati", "Fabio Casati", "Florian Daniel", "F. Daniel", "Marcos Baez",
    "M. Baez",   "Luca Rossi",   "Stefano Soi",    "Giulia Bianchi"};
constexpr std::array<const char *, 5> kVenuePool = {"ICWE", "WWW", "Phys. Rev. B",
                                                     "Unknown Workshop", ""};
constexpr std::array<const char *, 10> kWordPool = {
    "mashup", "mashups", "evaluation", "research", "web", "quantum", "spin",
    "the",    "service", "tools"};
constexpr std::array<const char *, 4> kAffiliationPool = {
    "University of Trento", "University of Trento, DISI", "University of Milan",
    "QCRI"};

}  // namespace

Corpus RandomCorpus(std::mt19937 &rng, const RandomCorpusOptions &options) {
  std::uniform_int_distribution<std::size_t> count(1, options.max_records);
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  const std::size_t n = count(rng);
  std::vector<CitationRecord> records;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> authors = {kPrincipalPool[pick(kPrincipalPool.size())]};
    const std::size_t coauthors = pick(4);
    for (std::size_t c = 0; c < coauthors; ++c) {
      authors.push_back(kCoauthorPool[pick(kCoauthorPool.size())]);
    }
    std::string title;
    const std::size_t words = 1 + pick(4);
    for (std::size_t w = 0; w < words; ++w) {
      if (!title.empty()) title += ' ';
      title += kWordPool[pick(kWordPool.size())];
    }
    char id[24];
    std::snprintf(id, sizeof(id), "r%02zu", i);
    CitationRecord r =
        MakeRecord(id, title, std::move(authors), kVenuePool[pick(kVenuePool.size())]);
    if (options.affiliations) {
      switch (pick(3)) {
        case 0:
          r.affiliation = kAffiliationPool[pick(kAffiliationPool.size())];
          break;
        case 1:
          r.publisher_url = "https://doi.example/" + std::to_string(pick(6));
          break;
        default:
          break;
      }
    }
    records.push_back(std::move(r));
  }
  return Corpus(std::move(records));
}

NameVariant RandomQuery(std::mt19937 &rng) {
  const std::array<const char *, 4> queries = {"M. Imran", "Imran", "Muhammad Imran",
                                               "Malik Imran"};
  return ParseName(queries[std::uniform_int_distribution<std::size_t>(0, 3)(rng)]);
}

std::shared_ptr<FixtureAffiliationResolver> RandomCorpusResolver() {
  std::map<std::string, std::string> table;
  for (int i = 0; i < 6; ++i) {
    table["https://doi.example/" + std::to_string(i)] = kAffiliationPool[i % 4];
  }
  return std::make_shared<FixtureAffiliationResolver>(std::move(table));
}

std::shared_ptr<FixtureSearchProvider> RandomCorpusSearch() {
  auto search = std::make_shared<FixtureSearchProvider>();
  for (const char *name : kPrincipalPool) {
    search->Add(std::string(name) + " homepage",
                {SearchResult{"Imran homepage", "https://example.org/imran",
                              std::string(name) + " homepage mashup research web"}});
  }
  return search;
}

SessionConfig FixtureConfig() {
  SessionConfig config;
  config.venues = FixtureVenues();
  return config;
}

}  // namespace namediss::testing
