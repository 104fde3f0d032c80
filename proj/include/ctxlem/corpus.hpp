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
// Plain-text corpus preparation: rule-based sentence splitting, whitespace +
// punctuation tokenization, and a seeded reproducible shuffle. Implemented
// in-repo (no external tools) so runs are hermetic and deterministic.

#ifndef CTXLEM_CORPUS_HPP
#define CTXLEM_CORPUS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ctxlem {

// Tokenized sentences plus where they came from.
struct RawCorpus {
  std::vector<std::vector<std::string>> sentences;
  std::vector<std::string> provenance;  // source file identifiers
};

// Splits text into sentences. A split happens after sentence-final
// punctuation (., !, ?, U+2026) followed by whitespace and an uppercase
// letter or digit; a word present in `abbreviations` (e.g. "Dr.") suppresses
// the split after it. Each input line is a paragraph and always ends a
// sentence. Never splits inside a token.
std::vector<std::string> split_sentences(
    std::string_view text,
    const std::set<std::string>& abbreviations = {});

// Splits a sentence on whitespace, then detaches leading/trailing punctuation
// characters as separate tokens. Internal hyphens and apostrophes stay
// attached.
std::vector<std::string> tokenize(std::string_view sentence);

// Uniform Fisher-Yates permutation driven by the toolkit PRNG (xoshiro256**
// seeded via splitmix64); same seed, same permutation.
void shuffle_sentences(std::vector<std::vector<std::string>>& sentences,
                       std::uint64_t seed);

// Full pipeline over raw UTF-8 text: NFC-normalize, split into sentences,
// tokenize each. If `already_tokenized` is set, each input line is taken as a
// space-separated token sequence instead.
RawCorpus build_corpus(std::string_view text, bool already_tokenized = false,
                       const std::set<std::string>& abbreviations = {});

// One tokenized sentence per line, tokens space-separated.
std::string format_corpus(const RawCorpus& corpus);
RawCorpus parse_corpus_file(const std::string& path);

}  // namespace ctxlem

#endif  // CTXLEM_CORPUS_HPP
