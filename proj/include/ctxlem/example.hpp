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

#ifndef CTXLEM_EXAMPLE_HPP
#define CTXLEM_EXAMPLE_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace ctxlem {

// One target wordform inside a tokenized sentence plus its gold lemma; the
// universal training/evaluation record.
struct ContextualExample {
  std::vector<std::string> sentence;  // token forms
  std::size_t target_index = 0;
  std::string form;   // equals sentence[target_index]
  std::string lemma;  // gold lemma

  // Enforces 0 <= target_index < |sentence| and sentence[target_index]==form;
  // throws InternalError otherwise.
  void check() const;
};

// File format: one example per line, `lemma<TAB>target_index<TAB>tokens`
// where tokens are space-separated sentence forms. UTF-8, LF.
std::string format_example(const ContextualExample& ex);
std::vector<ContextualExample> parse_examples(const std::string& text);
std::string format_examples(const std::vector<ContextualExample>& examples);

}  // namespace ctxlem

#endif  // CTXLEM_EXAMPLE_HPP
