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

#ifndef NAMEDISS_NAMES_H_
#define NAMEDISS_NAMES_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace namediss {

// A case-folded given-name token. Initials are exactly one code point long.
struct GivenToken {
  std::string text;
  bool initial = false;

  bool operator==(const GivenToken &) const = default;
};

// A parsed author name. Two variants with equal surname and given tokens
// denote the same written form even when `raw` differs.
struct NameVariant {
  std::string raw;
  std::string surname;
  std::vector<GivenToken> given;

  int FullGivenCount() const;

  // "surname, g1 g2 ..." (comma always present); parsing this string yields the same surname and
  // given tokens.
  std::string Normalized() const;

  bool SameForm(const NameVariant &other) const {
    return surname == other.surname && given == other.given;
  }
};

// Accepts "Given Surname", "Surname, Given" and "Surname Initials" forms.
// Periods separate tokens; hyphenated names stay whole; tokens without any
// letter (e.g. DBLP's "0001" suffixes) are dropped. Throws DataError when no
// alphabetic token remains.
NameVariant ParseName(std::string_view raw);

std::optional<NameVariant> TryParseName(std::string_view raw);

// Equal surnames and position-wise compatible given tokens: an initial
// matches any token starting with that letter, full tokens must be equal, and
// a token missing on one side matches anything. Reflexive and symmetric but
// not transitive.
bool NamesCompatible(const NameVariant &a, const NameVariant &b);

// "surname/x" with x the first letter of the first given token, or
// "surname/_".
std::string CanonicalKey(const NameVariant &v);

// Strict weak ordering from most to least specific: more full given tokens,
// then longer raw string, then lexicographically smaller raw string.
bool MoreSpecific(const NameVariant &a, const NameVariant &b);

// Picks the most specific of a pairwise-compatible set. Throws DataError
// naming the first incompatible pair, or when `candidates` is empty.
NameVariant PromoteVariant(std::span<const NameVariant> candidates);

// Removes variants with the same normalized form (keeping the most specific
// raw spelling) and sorts by MoreSpecific.
std::vector<NameVariant> DistinctVariants(std::vector<NameVariant> variants);

// Partitions the variants into groups of mutually compatible names, greedily
// from most to least specific, and replaces each group by its promoted
// variant. Short forms are absorbed into the full forms they abbreviate;
// genuinely different full names stay separate.
std::vector<NameVariant> PromoteGroups(std::vector<NameVariant> variants);

// True when some pair across the two lists is compatible.
bool AnyCompatible(std::span<const NameVariant> a,
                   std::span<const NameVariant> b);

}  // namespace namediss

#endif  // NAMEDISS_NAMES_H_
