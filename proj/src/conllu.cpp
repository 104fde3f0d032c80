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

#include "ctxlem/conllu.hpp"

#include <set>

#include "ctxlem/error.hpp"
#include "ctxlem/text_util.hpp"
#include "ctxlem/unicode.hpp"

namespace ctxlem {

std::vector<AnnotatedSentence> parse_conllu(std::string_view text) {
  std::vector<AnnotatedSentence> sentences;
  AnnotatedSentence current;
  std::size_t lineno = 0;
  auto flush = [&] {
    if (!current.tokens.empty()) {
      sentences.push_back(std::move(current));
      current = AnnotatedSentence{};
    }
  };
  for (const std::string& line : split_lines(text)) {
    ++lineno;
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 10)
      throw ParseError("expected 10 tab-separated columns, got " +
                           std::to_string(cols.size()),
                       lineno);
    const std::string& id = cols[0];
    // Multiword-token ranges ("3-4") and empty nodes ("3.1") are not
    // syntactic words.
    if (id.find('-') != std::string::npos ||
        id.find('.') != std::string::npos)
      continue;
    std::string form = to_nfc(cols[1]);
    std::string lemma = to_nfc(cols[2]);
    if (form.empty() || lemma.empty())
      throw ParseError("empty FORM or LEMMA", lineno);
    current.tokens.emplace_back(std::move(form), std::move(lemma));
  }
  flush();
  return sentences;
}

std::vector<AnnotatedSentence> parse_conllu_file(const std::string& path) {
  return parse_conllu(read_file(path));
}

namespace {

ContextualExample make_example(const AnnotatedSentence& sentence,
                               std::size_t index) {
  ContextualExample ex;
  ex.sentence.reserve(sentence.tokens.size());
  for (const auto& [form, lemma] : sentence.tokens) ex.sentence.push_back(form);
  ex.target_index = index;
  ex.form = sentence.tokens[index].first;
  ex.lemma = sentence.tokens[index].second;
  return ex;
}

}  // namespace

std::vector<ContextualExample> first_n_tokens(
    const std::vector<AnnotatedSentence>& sentences, std::size_t n) {
  std::vector<ContextualExample> out;
  for (const AnnotatedSentence& sentence : sentences) {
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      if (out.size() == n) return out;
      out.push_back(make_example(sentence, i));
    }
  }
  return out;
}

std::vector<ContextualExample> first_n_types(
    const std::vector<AnnotatedSentence>& sentences, std::size_t n) {
  std::vector<ContextualExample> out;
  std::set<std::string> seen;
  for (const AnnotatedSentence& sentence : sentences) {
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      if (out.size() == n) return out;
      if (seen.insert(sentence.tokens[i].first).second)
        out.push_back(make_example(sentence, i));
    }
  }
  return out;
}

std::string format_conllu(const std::vector<AnnotatedSentence>& sentences) {
  std::string out;
  for (const AnnotatedSentence& sentence : sentences) {
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      out += std::to_string(i + 1);
      out += '\t';
      out += sentence.tokens[i].first;
      out += '\t';
      out += sentence.tokens[i].second;
      out += "\t_\t_\t_\t_\t_\t_\t_\n";
    }
    out += '\n';
  }
  return out;
}

}  // namespace ctxlem
