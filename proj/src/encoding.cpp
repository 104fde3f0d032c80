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

#include "ctxlem/encoding.hpp"

#include <algorithm>
#include <set>

#include "ctxlem/error.hpp"
#include "ctxlem/text_util.hpp"
#include "ctxlem/unicode.hpp"

namespace ctxlem {

std::vector<std::string> encode_input(const ContextualExample& example,
                                      std::size_t context_n) {
  example.check();

  std::vector<std::string> source;

  // Left context, built rightmost-first: characters of the words before the
  // target, with one <s> between adjacent words (none next to the target
  // itself; <lc> plays that role). Each character and each <s> costs one
  // symbol of the budget.
  {
    std::vector<std::string> left_rev;
    std::size_t budget = context_n;
    for (std::size_t w = example.target_index; w-- > 0 && budget > 0;) {
      if (w != example.target_index - 1) {
        left_rev.push_back(kBoundaryMarker);
        if (--budget == 0) break;
      }
      std::vector<std::string> chars = nfc_characters(example.sentence[w]);
      for (std::size_t c = chars.size(); c-- > 0 && budget > 0; --budget)
        left_rev.push_back(chars[c]);
    }
    source.assign(left_rev.rbegin(), left_rev.rend());
  }

  source.push_back(kLeftMarker);
  for (std::string& ch : nfc_characters(example.form))
    source.push_back(std::move(ch));
  source.push_back(kRightMarker);

  // Right context, leftmost-first, mirror of the left side.
  {
    std::size_t budget = context_n;
    for (std::size_t w = example.target_index + 1;
         w < example.sentence.size() && budget > 0; ++w) {
      if (w != example.target_index + 1) {
        source.push_back(kBoundaryMarker);
        if (--budget == 0) break;
      }
      std::vector<std::string> chars = nfc_characters(example.sentence[w]);
      for (std::size_t c = 0; c < chars.size() && budget > 0; ++c, --budget)
        source.push_back(chars[c]);
    }
  }

  return source;
}

std::vector<std::string> encode_output(std::string_view lemma) {
  if (lemma.empty()) throw InvalidArgument("cannot encode an empty lemma");
  return nfc_characters(lemma);
}

std::string decode_output(const std::vector<std::string>& target) {
  std::string out;
  for (const std::string& symbol : target) out += symbol;
  return out;
}

EncodedExample encode_example(const ContextualExample& example,
                              std::size_t context_n) {
  return EncodedExample{encode_input(example, context_n),
                        encode_output(example.lemma)};
}

EncodedExample encode_autoencoding_example(const ContextualExample& example,
                                           std::size_t context_n) {
  return EncodedExample{encode_input(example, context_n),
                        encode_output(example.form)};
}

std::vector<std::int32_t> SymbolVocab::lookup_all(
    const std::vector<std::string>& syms) const {
  std::vector<std::int32_t> out;
  out.reserve(syms.size());
  for (const std::string& s : syms) out.push_back(lookup(s));
  return out;
}

SymbolVocab SymbolVocab::from_symbols(std::vector<std::string> content) {
  SymbolVocab vocab;
  vocab.symbols = {kPadSymbol, kEosSymbol, kUnkSymbol};
  vocab.symbols.insert(vocab.symbols.end(),
                       std::make_move_iterator(content.begin()),
                       std::make_move_iterator(content.end()));
  for (std::size_t i = 0; i < vocab.symbols.size(); ++i)
    vocab.ids[vocab.symbols[i]] = static_cast<std::int32_t>(i);
  if (vocab.ids.size() != vocab.symbols.size())
    throw InternalError("vocabulary contains duplicate symbols");
  return vocab;
}

SymbolVocab build_vocab(const std::vector<EncodedExample>& examples) {
  if (examples.empty())
    throw InvalidArgument("cannot build a vocabulary from zero examples");
  std::set<std::string> content{kLeftMarker, kRightMarker, kBoundaryMarker};
  for (const EncodedExample& ex : examples) {
    content.insert(ex.source.begin(), ex.source.end());
    content.insert(ex.target.begin(), ex.target.end());
  }
  return SymbolVocab::from_symbols(
      std::vector<std::string>(content.begin(), content.end()));
}

std::string format_symbol_lines(
    const std::vector<std::vector<std::string>>& lines) {
  std::string out;
  for (const auto& line : lines) {
    out += join(line, " ");
    out += '\n';
  }
  return out;
}

std::vector<std::vector<std::string>> parse_symbol_lines(
    std::string_view text) {
  std::vector<std::vector<std::string>> out;
  for (const std::string& line : split_lines(text))
    out.push_back(split_ws(line));
  return out;
}

}  // namespace ctxlem
