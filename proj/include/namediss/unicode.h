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

#ifndef NAMEDISS_UNICODE_H_
#define NAMEDISS_UNICODE_H_

#include <string>
#include <string_view>
#include <vector>

namespace namediss {

// Decodes UTF-8 into Unicode scalar values. Ill-formed sequences decode to
// U+FFFD.
std::u32string ToCodePoints(std::string_view utf8);

std::string ToUtf8(std::u32string_view text);

// NFC normalization followed by full Unicode case folding. Diacritics are
// kept.
std::string FoldCase(std::string_view utf8);

bool IsAlpha(char32_t c);
bool IsAlnum(char32_t c);

// Splits on every code point that is not a letter or digit. Tokens are
// case-folded.
std::vector<std::string> AlnumTokens(std::string_view utf8);

}  // namespace namediss

#endif  // NAMEDISS_UNICODE_H_
