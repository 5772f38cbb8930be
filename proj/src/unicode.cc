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

#include "namediss/unicode.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <stdexcept>

namespace namediss {

namespace {

icu::UnicodeString Nfc(const icu::UnicodeString &text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC unavailable");
  icu::UnicodeString out = nfc->normalize(text, status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU normalization failed");
  return out;
}

}  // namespace

std::u32string ToCodePoints(std::string_view utf8) {
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  std::u32string out;
  out.reserve(text.length());
  for (int32_t i = 0; i < text.length();) {
    UChar32 c = text.char32At(i);
    out.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }
  return out;
}

std::string ToUtf8(std::u32string_view text) {
  icu::UnicodeString s = icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32 *>(text.data()),
      static_cast<int32_t>(text.size()));
  std::string out;
  s.toUTF8String(out);
  return out;
}

std::string FoldCase(std::string_view utf8) {
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  icu::UnicodeString folded = Nfc(Nfc(text).foldCase());
  std::string out;
  folded.toUTF8String(out);
  return out;
}

bool IsAlpha(char32_t c) { return u_isalpha(static_cast<UChar32>(c)); }

bool IsAlnum(char32_t c) { return u_isalnum(static_cast<UChar32>(c)); }

std::vector<std::string> AlnumTokens(std::string_view utf8) {
  std::vector<std::string> tokens;
  std::u32string current;
  for (char32_t c : ToCodePoints(FoldCase(utf8))) {
    if (IsAlnum(c)) {
      current.push_back(c);
    } else if (!current.empty()) {
      tokens.push_back(ToUtf8(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(ToUtf8(current));
  return tokens;
}

}  // namespace namediss
