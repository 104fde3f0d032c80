// Copyright 2026 The ctxlem Authors
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
//
// Minimal Unicode support: strict UTF-8 codec, canonical composition (NFC),
// and the three general-category tests the corpus pipeline needs. Data tables
// are generated by scripts/gen_unicode_tables.py.

#ifndef CTXLEM_UNICODE_HPP
#define CTXLEM_UNICODE_HPP

#include <string>
#include <string_view>
#include <vector>

namespace ctxlem {

// Decodes strict UTF-8; throws DecodeError on malformed input (overlong
// forms, surrogates, out-of-range scalars, truncated sequences).
std::vector<char32_t> decode_utf8(std::string_view s);

std::string encode_utf8(const std::vector<char32_t>& cps);
void append_utf8(std::string& out, char32_t cp);

// Canonical decomposition + canonical ordering + canonical composition.
std::vector<char32_t> to_nfc(const std::vector<char32_t>& cps);

// NFC over a UTF-8 string; validates the encoding as a side effect.
std::string to_nfc(std::string_view utf8);

// Splits a UTF-8 string into one std::string per codepoint, NFC-normalized.
std::vector<std::string> nfc_characters(std::string_view utf8);

bool is_uppercase(char32_t cp);  // general category Lu
bool is_digit(char32_t cp);      // general category Nd
bool is_punct(char32_t cp);      // general categories P*

}  // namespace ctxlem

#endif  // CTXLEM_UNICODE_HPP
