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

#include "ctxlem/example.hpp"

#include <cstdlib>

#include "ctxlem/error.hpp"
#include "ctxlem/text_util.hpp"

namespace ctxlem {

void ContextualExample::check() const {
  if (sentence.empty() || target_index >= sentence.size())
    throw InternalError("example target_index out of range");
  if (sentence[target_index] != form)
    throw InternalError("example form does not match sentence token");
  if (form.empty() || lemma.empty())
    throw InternalError("example with empty form or lemma");
}

std::string format_example(const ContextualExample& ex) {
  ex.check();
  std::string line = ex.lemma;
  line += '\t';
  line += std::to_string(ex.target_index);
  line += '\t';
  line += join(ex.sentence, " ");
  return line;
}

std::vector<ContextualExample> parse_examples(const std::string& text) {
  std::vector<ContextualExample> out;
  std::size_t lineno = 0;
  for (const std::string& line : split_lines(text)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 3)
      throw ParseError("expected 3 tab-separated columns", lineno);
    ContextualExample ex;
    ex.lemma = cols[0];
    char* end = nullptr;
    unsigned long long idx = std::strtoull(cols[1].c_str(), &end, 10);
    if (end == cols[1].c_str() || *end != '\0')
      throw ParseError("target index is not a number", lineno);
    ex.target_index = static_cast<std::size_t>(idx);
    ex.sentence = split_ws(cols[2]);
    if (ex.target_index >= ex.sentence.size())
      throw ParseError("target index out of range", lineno);
    ex.form = ex.sentence[ex.target_index];
    if (ex.lemma.empty()) throw ParseError("empty lemma", lineno);
    out.push_back(std::move(ex));
  }
  return out;
}

std::string format_examples(const std::vector<ContextualExample>& examples) {
  std::string out;
  for (const ContextualExample& ex : examples) {
    out += format_example(ex);
    out += '\n';
  }
  return out;
}

}  // namespace ctxlem
