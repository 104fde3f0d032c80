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
// Character-level input/output encoding for context-sensitive lemmatization.
// The source sequence is the target wordform wrapped in <lc> ... <rc> with up
// to N context symbols on each side, where every context character and every
// inter-word boundary marker <s> counts as one symbol toward N. Words at the
// context edge are truncated silently; sentence edges are not padded.

#ifndef CTXLEM_ENCODING_HPP
#define CTXLEM_ENCODING_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ctxlem/example.hpp"

namespace ctxlem {

inline constexpr const char* kLeftMarker = "<lc>";
inline constexpr const char* kRightMarker = "<rc>";
inline constexpr const char* kBoundaryMarker = "<s>";
inline constexpr const char* kPadSymbol = "<pad>";
inline constexpr const char* kEosSymbol = "<eos>";
inline constexpr const char* kUnkSymbol = "<unk>";

// Symbol value for an unbounded context window.
inline constexpr std::size_t kUnlimitedContext = static_cast<std::size_t>(-1);

struct EncodedExample {
  std::vector<std::string> source;  // chars and markers
  std::vector<std::string> target;  // lemma chars
};

// Source symbols for one example at context width N (symbols per side).
std::vector<std::string> encode_input(const ContextualExample& example,
                                      std::size_t context_n);

// Target symbols: one per Unicode character of the lemma, NFC-normalized.
// The lemma must be non-empty.
std::vector<std::string> encode_output(std::string_view lemma);

// Inverse of encode_output: concatenates target symbols back into a string.
std::string decode_output(const std::vector<std::string>& target);

EncodedExample encode_example(const ContextualExample& example,
                              std::size_t context_n);

// Autoencoding variant: the target is the wordform itself (no lemma
// supervision). Context width 0 reproduces the plain no-context setup.
EncodedExample encode_autoencoding_example(const ContextualExample& example,
                                           std::size_t context_n = 0);

// Dense symbol->id mapping: ids 0,1,2 are <pad>, <eos>, <unk>; all content
// symbols (observed symbols plus the three markers) follow in lexicographic
// byte order.
struct SymbolVocab {
  std::vector<std::string> symbols;        // id -> symbol
  std::map<std::string, std::int32_t> ids;  // symbol -> id

  static constexpr std::int32_t kPadId = 0;
  static constexpr std::int32_t kEosId = 1;
  static constexpr std::int32_t kUnkId = 2;

  std::int32_t size() const { return static_cast<std::int32_t>(symbols.size()); }

  // Unknown symbols map to <unk>.
  std::int32_t lookup(const std::string& symbol) const {
    auto it = ids.find(symbol);
    return it == ids.end() ? kUnkId : it->second;
  }

  std::vector<std::int32_t> lookup_all(
      const std::vector<std::string>& symbols) const;

  static SymbolVocab from_symbols(std::vector<std::string> content_symbols);
};

// Vocabulary over every symbol in sources and targets plus reserved symbols;
// deterministic regardless of example order.
SymbolVocab build_vocab(const std::vector<EncodedExample>& examples);

// Dataset serialization: one example per line, symbols space-separated.
std::string format_symbol_lines(
    const std::vector<std::vector<std::string>>& lines);
std::vector<std::vector<std::string>> parse_symbol_lines(std::string_view text);

}  // namespace ctxlem

#endif  // CTXLEM_ENCODING_HPP
