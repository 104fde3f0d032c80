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
// Reader for lemma-annotated treebank sentences in CoNLL-U format, plus the
// token-based and type-based training-set constructions.

#ifndef CTXLEM_CONLLU_HPP
#define CTXLEM_CONLLU_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctxlem/example.hpp"

namespace ctxlem {

struct AnnotatedSentence {
  // (form, lemma) per syntactic word, in order. Never empty.
  std::vector<std::pair<std::string, std::string>> tokens;
};

// Parses CoNLL-U text: 10 tab-separated columns per token line, '#' comment
// lines, blank line ends a sentence. Uses FORM (column 2) and LEMMA (column
// 3); skips multiword-token ranges (ID contains '-') and empty nodes (ID
// contains '.'). Throws ParseError with the line number for token lines that
// do not have exactly 10 columns.
std::vector<AnnotatedSentence> parse_conllu(std::string_view text);

// The first n tokens in reading order, each as a ContextualExample. Returns
// all tokens if fewer than n exist.
std::vector<ContextualExample> first_n_tokens(
    const std::vector<AnnotatedSentence>& sentences, std::size_t n);

// Scans tokens in reading order and emits an example at the first occurrence
// of each not-yet-seen form (exact string identity); stops after n distinct
// forms.
std::vector<ContextualExample> first_n_types(
    const std::vector<AnnotatedSentence>& sentences, std::size_t n);

// Token-level (form, lemma) occurrence counts, used as the adjusted-ambiguity
// reference. Keyed by form, then lemma.
std::vector<AnnotatedSentence> parse_conllu_file(const std::string& path);

// Serializes annotated sentences back to minimal CoNLL-U (ID, FORM, LEMMA
// filled; remaining columns '_').
std::string format_conllu(const std::vector<AnnotatedSentence>& sentences);

}  // namespace ctxlem

#endif  // CTXLEM_CONLLU_HPP
