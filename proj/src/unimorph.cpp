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

#include "ctxlem/unimorph.hpp"

#include <tuple>

#include "ctxlem/error.hpp"
#include "ctxlem/text_util.hpp"
#include "ctxlem/unicode.hpp"

namespace ctxlem {

std::map<std::string, std::set<std::string>> Lexicon::rebuild_form_index()
    const {
  std::map<std::string, std::set<std::string>> index;
  for (const InflectionEntry& e : entries) index[e.form].insert(e.lemma);
  return index;
}

Lexicon parse_unimorph(std::string_view text) {
  Lexicon lexicon;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  std::size_t lineno = 0;
  for (const std::string& line : split_lines(text)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() < 2)
      throw ParseError("expected at least 2 tab-separated columns", lineno);
    std::string lemma = to_nfc(trim(cols[0]));
    std::string form = to_nfc(trim(cols[1]));
    if (lemma.empty() || form.empty())
      throw ParseError("empty lemma or form", lineno);
    std::string features = cols.size() > 2 ? trim(cols[2]) : std::string();
    if (!seen.insert({lemma, form, features}).second) continue;
    InflectionEntry entry;
    entry.lemma = std::move(lemma);
    entry.form = std::move(form);
    if (!features.empty()) entry.features = split(features, ';');
    lexicon.entries.push_back(std::move(entry));
  }
  lexicon.form_index = lexicon.rebuild_form_index();
  return lexicon;
}

std::set<std::pair<std::string, std::string>> unambiguous_pairs(
    const Lexicon& lexicon) {
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& [form, lemmas] : lexicon.form_index) {
    if (lemmas.size() == 1) pairs.emplace(form, *lemmas.begin());
  }
  return pairs;
}

AmbiguityReport ambiguity_report(
    const Lexicon& lexicon,
    const std::map<std::string, std::string>* reference_unambiguous) {
  AmbiguityReport report;
  // POS of a form: first feature tag of every entry attesting it.
  std::map<std::string, std::set<std::string>> pos_of_form;
  for (const InflectionEntry& e : lexicon.entries) {
    if (!e.features.empty()) pos_of_form[e.form].insert(e.features.front());
  }
  for (const auto& [form, lemmas] : lexicon.form_index) {
    ++report.total_forms;
    const bool ambiguous = lemmas.size() > 1;
    if (ambiguous)
      ++report.ambiguous_forms;
    else
      ++report.unambiguous_forms;
    if (auto it = pos_of_form.find(form); it != pos_of_form.end()) {
      for (const std::string& pos : it->second) {
        ++report.forms_per_pos[pos];
        if (ambiguous) ++report.ambiguous_per_pos[pos];
      }
    }
    if (!ambiguous && reference_unambiguous) {
      auto ref = reference_unambiguous->find(form);
      if (ref != reference_unambiguous->end() && ref->second != *lemmas.begin())
        ++report.reference_conflicts;
    }
  }
  return report;
}

std::string format_unambiguous_pairs(const Lexicon& lexicon) {
  std::string out;
  for (const auto& [form, lemma] : unambiguous_pairs(lexicon)) {
    out += form;
    out += '\t';
    out += lemma;
    out += '\n';
  }
  return out;
}

std::map<std::string, std::string> parse_pair_file(std::string_view text) {
  std::map<std::string, std::string> pairs;
  std::size_t lineno = 0;
  for (const std::string& line : split_lines(text)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 2)
      throw ParseError("expected form<TAB>lemma", lineno);
    pairs[to_nfc(cols[0])] = to_nfc(cols[1]);
  }
  return pairs;
}

}  // namespace ctxlem
