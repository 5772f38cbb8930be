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

#ifndef NAMEDISS_TESTS_FIXTURES_H_
#define NAMEDISS_TESTS_FIXTURES_H_

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "namediss/clustering.h"
#include "namediss/providers.h"
#include "namediss/records.h"
#include "namediss/session.h"

namespace namediss::testing {

CitationRecord MakeRecord(std::string id, std::string title,
                          std::vector<std::string> authors, std::string venue = "");

// Venue map used by the fixtures: web/database venues -> "CS", physics
// journals -> "Physics".
VenueMap FixtureVenues();

// Two different researchers both written "M. Imran": author_key imran_a
// publishes in CS venues, imran_b in physics journals. Ten records each,
// co-authors chained within each author, disjoint across them.
Corpus MixedCitationCorpus();

// One researcher (author_key imran_m) written "Muhammad Imran", "M. Imran"
// and "Imran, M." across twelve CS records chained by co-authors.
Corpus SplitCitationCorpus();

// A CS corpus for "M. Imran" (author_key imran_m) whose records split into
// four co-author groups, plus a distractor "Malik Imran" (imran_k):
//   g1, g2  share the affiliation University of Trento (with/without DISI)
//   g3      shares title vocabulary with g1/g2, no affiliation
//   g4      only reachable through the homepage search fixture
//   k       "Malik Imran", University of Milan, unrelated titles
Corpus LayeredCorpus();
std::shared_ptr<FixtureSearchProvider> LayeredSearch();

// Random corpus over small name/venue/title pools, for property tests.
struct RandomCorpusOptions {
  std::size_t max_records = 20;
  bool affiliations = true;
};
Corpus RandomCorpus(std::mt19937 &rng, const RandomCorpusOptions &options = {});
NameVariant RandomQuery(std::mt19937 &rng);
std::shared_ptr<FixtureAffiliationResolver> RandomCorpusResolver();
std::shared_ptr<FixtureSearchProvider> RandomCorpusSearch();

SessionConfig FixtureConfig();

}  // namespace namediss::testing

#endif  // NAMEDISS_TESTS_FIXTURES_H_
