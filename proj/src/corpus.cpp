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

#include "ctxlem/corpus.hpp"

#include "ctxlem/error.hpp"
#include "ctxlem/rng.hpp"
#include "ctxlem/text_util.hpp"
#include "ctxlem/unicode.hpp"

namespace ctxlem {
namespace {

bool is_sentence_final(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x2026;
}

bool is_space_cp(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == 0xA0;
}

// The whitespace-delimited word ending at position i (inclusive).
std::vector<char32_t> word_ending_at(const std::vector<char32_t>& cps,
                                     std::size_t i) {
  std::size_t start = i + 1;
  while (start > 0 && !is_space_cp(cps[start - 1])) --start;
  return std::vector<char32_t>(cps.begin() + static_cast<std::ptrdiff_t>(start),
                               cps.begin() + static_cast<std::ptrdiff_t>(i) + 1);
}

}  // namespace

std::vector<std::string> split_sentences(
    std::string_view text, const std::set<std::string>& abbreviations) {
  std::vector<std::string> sentences;
  for (const std::string& paragraph : split_lines(text)) {
    std::vector<char32_t> cps = decode_utf8(paragraph);
    std::size_t start = 0;
    auto emit = [&](std::size_t end) {
      std::vector<char32_t> piece(cps.begin() + static_cast<std::ptrdiff_t>(start),
                                  cps.begin() + static_cast<std::ptrdiff_t>(end));
      std::string s = trim(encode_utf8(piece));
      if (!s.empty()) sentences.push_back(std::move(s));
      start = end;
    };
    for (std::size_t i = 0; i < cps.size(); ++i) {
      if (!is_sentence_final(cps[i])) continue;
      // Require whitespace then an uppercase letter or digit.
      std::size_t j = i + 1;
      if (j >= cps.size() || !is_space_cp(cps[j])) continue;
      while (j < cps.size() && is_space_cp(cps[j])) ++j;
      if (j >= cps.size() || !(is_uppercase(cps[j]) || is_digit(cps[j])))
        continue;
      if (!abbreviations.empty() &&
          abbreviations.count(encode_utf8(word_ending_at(cps, i))))
        continue;
      emit(i + 1);
    }
    emit(cps.size());
  }
  return sentences;
}

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> tokens;
  for (const std::string& chunk : split_ws(sentence)) {
    std::vector<char32_t> cps = decode_utf8(chunk);
    std::size_t lo = 0;
    std::size_t hi = cps.size();
    while (lo < hi && is_punct(cps[lo])) ++lo;
    while (hi > lo && is_punct(cps[hi - 1])) --hi;
    std::string one;
    for (std::size_t i = 0; i < lo; ++i) {
      one.clear();
      append_utf8(one, cps[i]);
      tokens.push_back(one);
    }
    if (lo < hi) {
      one.clear();
      for (std::size_t i = lo; i < hi; ++i) append_utf8(one, cps[i]);
      tokens.push_back(one);
    }
    for (std::size_t i = hi; i < cps.size(); ++i) {
      one.clear();
      append_utf8(one, cps[i]);
      tokens.push_back(one);
    }
  }
  return tokens;
}

void shuffle_sentences(std::vector<std::vector<std::string>>& sentences,
                       std::uint64_t seed) {
  Rng rng(seed);
  rng.shuffle(sentences);
}

RawCorpus build_corpus(std::string_view text, bool already_tokenized,
                       const std::set<std::string>& abbreviations) {
  RawCorpus corpus;
  if (already_tokenized) {
    for (const std::string& line : split_lines(text)) {
      std::vector<std::string> tokens;
      for (const std::string& token : split_ws(line))
        tokens.push_back(to_nfc(token));
      if (!tokens.empty()) corpus.sentences.push_back(std::move(tokens));
    }
    return corpus;
  }
  const std::string normalized = to_nfc(text);
  for (const std::string& sentence : split_sentences(normalized, abbreviations)) {
    std::vector<std::string> tokens = tokenize(sentence);
    if (!tokens.empty()) corpus.sentences.push_back(std::move(tokens));
  }
  return corpus;
}

std::string format_corpus(const RawCorpus& corpus) {
  std::string out;
  for (const auto& sentence : corpus.sentences) {
    out += join(sentence, " ");
    out += '\n';
  }
  return out;
}

RawCorpus parse_corpus_file(const std::string& path) {
  RawCorpus corpus = build_corpus(read_file(path), /*already_tokenized=*/true);
  corpus.provenance.push_back(path);
  return corpus;
}

}  // namespace ctxlem
