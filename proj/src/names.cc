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

#include "namediss/names.h"

#include <algorithm>

#include "namediss/error.h"
#include "namediss/unicode.h"

namespace namediss {

namespace {

bool HasLetter(const std::u32string &token) {
  return std::any_of(token.begin(), token.end(), IsAlpha);
}

// Splits the text on whitespace and periods; strips stray hyphens and
// apostrophes at token edges.
std::vector<std::u32string> NameTokens(std::u32string_view text) {
  std::vector<std::u32string> tokens;
  std::u32string current;
  auto flush = [&]() {
    auto edge = [](char32_t c) { return c == U'-' || c == U'\'' || c == U'’'; };
    while (!current.empty() && edge(current.front())) current.erase(0, 1);
    while (!current.empty() && edge(current.back())) current.pop_back();
    if (!current.empty() && HasLetter(current)) tokens.push_back(current);
    current.clear();
  };
  for (char32_t c : text) {
    if (c == U'.' || c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' ||
        c == U'\u00A0') {
      flush();
    } else {
      current.push_back(c);
    }
  }
  flush();
  return tokens;
}

GivenToken MakeGiven(const std::u32string &token) {
  return GivenToken{ToUtf8(token), token.size() == 1};
}

}  // namespace

int NameVariant::FullGivenCount() const {
  return static_cast<int>(std::count_if(
      given.begin(), given.end(), [](const GivenToken &t) { return !t.initial; }));
}

std::string NameVariant::Normalized() const {
  std::string out = surname + ",";
  for (const GivenToken &t : given) {
    out += ' ';
    out += t.text;
  }
  return out;
}

NameVariant ParseName(std::string_view raw) {
  const std::u32string folded = ToCodePoints(FoldCase(raw));
  NameVariant v;
  v.raw = std::string(raw);

  const auto comma = folded.find(U',');
  if (comma != std::u32string::npos) {
    std::vector<std::u32string> surname = NameTokens(
        std::u32string_view(folded).substr(0, comma));
    std::vector<std::u32string> given =
        NameTokens(std::u32string_view(folded).substr(comma + 1));
    if (!surname.empty()) {
      std::u32string joined;
      for (const auto &t : surname) {
        if (!joined.empty()) joined.push_back(U' ');
        joined += t;
      }
      v.surname = ToUtf8(joined);
      for (const auto &t : given) v.given.push_back(MakeGiven(t));
      return v;
    }
    // ", Given" with nothing before the comma: fall through and treat the
    // remainder as a comma-less name.
  }

  std::vector<std::u32string> tokens = NameTokens(folded);
  if (tokens.empty()) {
    throw DataError("name has no alphabetic token: '" + std::string(raw) + "'");
  }

  // Default: the last full token is the surname. "Surname Initial" forms
  // (last token an initial, some earlier token full) resolve the same way.
  std::size_t surname_at = tokens.size() - 1;
  for (std::size_t i = tokens.size(); i-- > 0;) {
    if (tokens[i].size() > 1) {
      surname_at = i;
      break;
    }
  }
  v.surname = ToUtf8(tokens[surname_at]);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i != surname_at) v.given.push_back(MakeGiven(tokens[i]));
  }
  return v;
}

std::optional<NameVariant> TryParseName(std::string_view raw) {
  try {
    return ParseName(raw);
  } catch (const DataError &) {
    return std::nullopt;
  }
}

namespace {

char32_t FirstCodePoint(const std::string &s) {
  std::u32string cps = ToCodePoints(s);
  return cps.empty() ? U'\0' : cps.front();
}

bool TokensCompatible(const GivenToken &a, const GivenToken &b) {
  if (a.initial && b.initial) return a.text == b.text;
  if (a.initial) return FirstCodePoint(b.text) == FirstCodePoint(a.text);
  if (b.initial) return FirstCodePoint(a.text) == FirstCodePoint(b.text);
  return a.text == b.text;
}

}  // namespace

bool NamesCompatible(const NameVariant &a, const NameVariant &b) {
  if (a.surname != b.surname) return false;
  const std::size_t n = std::min(a.given.size(), b.given.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!TokensCompatible(a.given[i], b.given[i])) return false;
  }
  return true;
}

std::string CanonicalKey(const NameVariant &v) {
  if (v.given.empty()) return v.surname + "/_";
  return v.surname + "/" + ToUtf8(std::u32string(1, FirstCodePoint(v.given[0].text)));
}

bool MoreSpecific(const NameVariant &a, const NameVariant &b) {
  const int fa = a.FullGivenCount();
  const int fb = b.FullGivenCount();
  if (fa != fb) return fa > fb;
  const std::size_t la = ToCodePoints(a.raw).size();
  const std::size_t lb = ToCodePoints(b.raw).size();
  if (la != lb) return la > lb;
  return a.raw < b.raw;
}

NameVariant PromoteVariant(std::span<const NameVariant> candidates) {
  if (candidates.empty()) throw DataError("no candidate name variants");
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (!NamesCompatible(candidates[i], candidates[j])) {
        throw DataError("incompatible name variants: '" + candidates[i].raw +
                        "' and '" + candidates[j].raw + "'");
      }
    }
  }
  return *std::min_element(candidates.begin(), candidates.end(), MoreSpecific);
}

std::vector<NameVariant> DistinctVariants(std::vector<NameVariant> variants) {
  std::sort(variants.begin(), variants.end(), MoreSpecific);
  std::vector<NameVariant> out;
  for (NameVariant &v : variants) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const NameVariant &o) {
      return o.SameForm(v);
    });
    if (!seen) out.push_back(std::move(v));
  }
  return out;
}

std::vector<NameVariant> PromoteGroups(std::vector<NameVariant> variants) {
  variants = DistinctVariants(std::move(variants));
  std::vector<std::vector<NameVariant>> groups;
  for (NameVariant &v : variants) {
    auto fits = [&](const std::vector<NameVariant> &group) {
      return std::all_of(group.begin(), group.end(), [&](const NameVariant &m) {
        return NamesCompatible(m, v);
      });
    };
    auto it = std::find_if(groups.begin(), groups.end(), fits);
    if (it == groups.end()) {
      groups.push_back({std::move(v)});
    } else {
      it->push_back(std::move(v));
    }
  }
  std::vector<NameVariant> out;
  out.reserve(groups.size());
  for (const auto &group : groups) out.push_back(PromoteVariant(group));
  std::sort(out.begin(), out.end(), MoreSpecific);
  return out;
}

bool AnyCompatible(std::span<const NameVariant> a,
                   std::span<const NameVariant> b) {
  for (const NameVariant &x : a) {
    for (const NameVariant &y : b) {
      if (NamesCompatible(x, y)) return true;
    }
  }
  return false;
}

}  // namespace namediss
