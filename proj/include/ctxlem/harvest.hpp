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
// Collects contextualized training examples for unambiguous lexicon types
// from a shuffled corpus. Token matching is exact (case-sensitive, NFC).

#ifndef CTXLEM_HARVEST_HPP
#define CTXLEM_HARVEST_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ctxlem/corpus.hpp"
#include "ctxlem/example.hpp"

namespace ctxlem {

struct HarvestSummary {
  std::size_t types_requested = 0;
  std::size_t types_found = 0;
  std::size_t contexts_per_type = 1;  // j
  std::size_t unambiguous_types_available = 0;  // |pairs|
  std::size_t types_attested_in_corpus = 0;     // pairs with >= 1 context
  std::size_t types_with_j_contexts = 0;        // pairs with >= j contexts
};

// Scans sentences in order, tokens left to right; at the first occurrence of
// each not-yet-collected unambiguous form, emits one ContextualExample with
// the lexicon lemma. Stops after n distinct types; returns fewer when the
// corpus is exhausted (reported in the summary, not an error).
std::vector<ContextualExample> harvest_first_n(
    const RawCorpus& corpus, const std::map<std::string, std::string>& pairs,
    std::size_t n, HarvestSummary* summary = nullptr);

// Counts contexts (sentence, position occurrences) per unambiguous form;
// forms with at least j contexts are eligible. Selects min(n, |eligible|)
// forms uniformly at random and, per selected form, j of its contexts
// uniformly without replacement. Output is grouped by type, types in
// selection order. Deterministic given the seed.
std::vector<ContextualExample> harvest_j_per_type(
    const RawCorpus& corpus, const std::map<std::string, std::string>& pairs,
    std::size_t n, std::size_t j, std::uint64_t seed,
    HarvestSummary* summary = nullptr);

}  // namespace ctxlem

#endif  // CTXLEM_HARVEST_HPP
