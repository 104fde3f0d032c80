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

#include "ctxlem/harvest.hpp"

#include <set>

#include "ctxlem/error.hpp"
#include "ctxlem/rng.hpp"

namespace ctxlem {
namespace {

ContextualExample make_example(const std::vector<std::string>& sentence,
                               std::size_t index, const std::string& lemma) {
  ContextualExample ex;
  ex.sentence = sentence;
  ex.target_index = index;
  ex.form = sentence[index];
  ex.lemma = lemma;
  ex.check();
  return ex;
}

}  // namespace

std::vector<ContextualExample> harvest_first_n(
    const RawCorpus& corpus, const std::map<std::string, std::string>& pairs,
    std::size_t n, HarvestSummary* summary) {
  std::vector<ContextualExample> out;
  std::set<std::string> collected;
  for (const auto& sentence : corpus.sentences) {
    if (out.size() == n) break;
    for (std::size_t i = 0; i < sentence.size() && out.size() < n; ++i) {
      auto it = pairs.find(sentence[i]);
      if (it == pairs.end()) continue;
      if (!collected.insert(it->first).second) continue;
      out.push_back(make_example(sentence, i, it->second));
    }
  }
  if (summary) {
    summary->types_requested = n;
    summary->types_found = out.size();
    summary->contexts_per_type = 1;
    summary->unambiguous_types_available = pairs.size();
  }
  return out;
}

std::vector<ContextualExample> harvest_j_per_type(
    const RawCorpus& corpus, const std::map<std::string, std::string>& pairs,
    std::size_t n, std::size_t j, std::uint64_t seed,
    HarvestSummary* summary) {
  if (j < 1) throw InvalidArgument("harvest_j_per_type requires j >= 1");

  // Pass 1: all contexts per unambiguous form, in corpus order. Forms are
  // keyed by first occurrence so the eligible list is deterministic.
  std::map<std::string, std::size_t> first_seen;  // form -> eligible list pos
  std::vector<std::string> forms_in_order;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> contexts;
  for (std::size_t s = 0; s < corpus.sentences.size(); ++s) {
    const auto& sentence = corpus.sentences[s];
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      auto it = pairs.find(sentence[i]);
      if (it == pairs.end()) continue;
      auto [pos, inserted] = first_seen.try_emplace(it->first, forms_in_order.size());
      if (inserted) {
        forms_in_order.push_back(it->first);
        contexts.emplace_back();
      }
      contexts[pos->second].emplace_back(s, i);
    }
  }

  std::vector<std::size_t> eligible;
  for (std::size_t k = 0; k < forms_in_order.size(); ++k) {
    if (contexts[k].size() >= j) eligible.push_back(k);
  }

  Rng rng(seed);
  const std::vector<std::size_t> picked =
      rng.sample_indices(eligible.size(), n);

  std::vector<ContextualExample> out;
  out.reserve(picked.size() * j);
  for (std::size_t p : picked) {
    const std::size_t k = eligible[p];
    const auto& ctx = contexts[k];
    const std::string& lemma = pairs.at(forms_in_order[k]);
    for (std::size_t c : rng.sample_indices(ctx.size(), j)) {
      const auto& [s, i] = ctx[c];
      out.push_back(make_example(corpus.sentences[s], i, lemma));
    }
  }

  if (summary) {
    summary->types_requested = n;
    summary->types_found = picked.size();
    summary->contexts_per_type = j;
    summary->unambiguous_types_available = pairs.size();
    summary->types_attested_in_corpus = forms_in_order.size();
    summary->types_with_j_contexts = eligible.size();
  }
  return out;
}

}  // namespace ctxlem
