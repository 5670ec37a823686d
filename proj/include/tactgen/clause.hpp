#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tactgen/caseframe.hpp"

namespace tactgen {

enum class Conversion {
  inf_mak,
  inf_ma,
  inf_is,
  noun_dik,
  noun_yacak,
  adj_yan,
  adj_dik,
  adj_yacak,
  adj_mis,
  adverb
};

std::string_view to_string(Conversion c);

enum class SubjectCase { nominative, genitive, gapped };

struct ClauseFormSpec {
  Conversion conversion = Conversion::inf_mak;
  bool needs_possessive_agr = false;
  SubjectCase subject_case = SubjectCase::nominative;
  bool outer_case_applies = false;
  // Adverbial suffix code (YINCA, KEN, ...) when conversion == adverb.
  std::string adverb;
  // Paired adverbials emit two verb words ("gelir gelmez", "gitti gideli", "koSa koSa").
  bool paired = false;

  // Suffix name used in morphological bundles (MAK, DIK, YAN, ...).
  std::string conv_code() const;

  friend bool operator==(const ClauseFormSpec&, const ClauseFormSpec&) = default;
};

enum class TenseRel { prior_or_concurrent, posterior };

ClauseFormSpec select_full_clause_form(ActType type, TenseRel rel, bool is_suffix = false);

enum class TenseClass { past_present, future, past_narrative };
std::string_view to_string(TenseClass t);
std::optional<TenseClass> parse_tense_class(std::string_view s);

// Tense class of a verb spec. Anything other than future or past narrative counts as past-present.
TenseClass tense_class(const VerbSpec& v);
TenseRel tense_rel(const VerbSpec& v);

struct ParticipleKey {
  GapRole role = GapRole::agent;
  Voice voice = Voice::active;
  TenseClass tense = TenseClass::past_present;
  bool transitive = true;
  std::optional<bool> subject_specific;
  friend bool operator==(const ParticipleKey&, const ParticipleKey&) = default;
};

// Gapped-relative participle table. Absent means the combination has no
// grammatical participle.
std::optional<ClauseFormSpec> select_participle(const ParticipleKey& key);

ClauseFormSpec select_adverbial(AdvType type);

// Clause label that holds the gapped role's filler inside the embedded clause.
Label gap_label(GapRole role, Voice voice, const CaseFrame& clause);

// Transitivity of a gapped clause with respect to the participle table.
bool clause_transitive(const CaseFrame& clause, GapRole role);

// Specificity of the clause subject; empty when the clause has no overt subject.
std::optional<bool> subject_specificity(const CaseFrame& clause);

ParticipleKey participle_key(GapRole role, const CaseFrame& clause);

// One row of the shipped participle table. `form` is empty for dashed cells.
struct ParticipleRow {
  std::string role;
  std::string voice;
  std::string tense;
  std::string transitivity;  // trans | intrans
  std::string subject;       // spec | non-spec | any | -
  std::string form;          // +yAn, +dHk+POSS, ... or "-"
};

std::vector<ParticipleRow> parse_participle_table(std::string_view text);

// Form label used in the table file for a selection result.
std::string participle_form_label(const std::optional<ClauseFormSpec>& spec);

}  // namespace tactgen
