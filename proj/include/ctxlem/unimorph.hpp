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
// UniMorph-style inflection tables and the unambiguous form->lemma mapping
// used for training-data augmentation. A form counts as ambiguous exactly
// when the tables attest two or more distinct lemmas for it; feature bundles
// are stored but never interpreted.

#ifndef CTXLEM_UNIMORPH_HPP
#define CTXLEM_UNIMORPH_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ctxlem {

struct InflectionEntry {
  std::string lemma;
  std::string form;
  std::vector<std::string> features;  // e.g. {"N","DAT","SG"}; may be empty
};

struct Lexicon {
  std::vector<InflectionEntry> entries;
  // form -> distinct lemmas attested for that form. Exactly the projection
  // of `entries`; rebuild_form_index() reproduces it.
  std::map<std::string, std::set<std::string>> form_index;

  std::map<std::string, std::set<std::string>> rebuild_form_index() const;
};

// Parses UniMorph TSV: `lemma<TAB>form[<TAB>features]`, UTF-8, blank lines
// permitted, exact duplicate lines collapsed. Lemma and form are trimmed and
// NFC-normalized. Throws ParseError (with line number) on rows with fewer
// than two columns or empty lemma/form; DecodeError on invalid UTF-8.
Lexicon parse_unimorph(std::string_view text);

// All (form, lemma) pairs whose form is attested for exactly one lemma.
// A form occurring in several slots of the same lemma is included once.
std::set<std::pair<std::string, std::string>> unambiguous_pairs(
    const Lexicon& lexicon);

struct AmbiguityReport {
  std::size_t total_forms = 0;
  std::size_t unambiguous_forms = 0;
  std::size_t ambiguous_forms = 0;
  // Per-POS breakdown (first feature tag of each entry attesting the form);
  // empty when no entry carries features.
  std::map<std::string, std::size_t> forms_per_pos;
  std::map<std::string, std::size_t> ambiguous_per_pos;
  // Forms unambiguous in both this lexicon and a reference form->lemma map
  // but with different lemmas (cross-resource annotation conflicts). Only
  // populated when a reference is supplied.
  std::size_t reference_conflicts = 0;
};

// Counts are consistent with unambiguous_pairs: total = unambiguous +
// ambiguous. `reference_unambiguous` may map forms to lemmas from a second
// resource (e.g. a treebank) to surface annotation conflicts.
AmbiguityReport ambiguity_report(
    const Lexicon& lexicon,
    const std::map<std::string, std::string>* reference_unambiguous = nullptr);

// Serializes unambiguous pairs as `form<TAB>lemma` lines sorted by form.
std::string format_unambiguous_pairs(const Lexicon& lexicon);

// Reads the `form<TAB>lemma` pair file written by format_unambiguous_pairs.
std::map<std::string, std::string> parse_pair_file(std::string_view text);

}  // namespace ctxlem

#endif  // CTXLEM_UNIMORPH_HPP
