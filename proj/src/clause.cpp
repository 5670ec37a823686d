#include "tactgen/clause.hpp"

#include <sstream>

#include "tactgen/error.hpp"

namespace tactgen {

std::string_view to_string(Conversion c) {
  switch (c) {
    case Conversion::inf_mak: return "INF-MAK";
    case Conversion::inf_ma: return "INF-MA";
    case Conversion::inf_is: return "INF-IS";
    case Conversion::noun_dik: return "NOUN-DIK";
    case Conversion::noun_yacak: return "NOUN-YACAK";
    case Conversion::adj_yan: return "ADJ-YAN";
    case Conversion::adj_dik: return "ADJ-DIK";
    case Conversion::adj_yacak: return "ADJ-YACAK";
    case Conversion::adj_mis: return "ADJ-MIS";
    case Conversion::adverb: return "ADV";
  }
  return "?";
}

std::string ClauseFormSpec::conv_code() const {
  switch (conversion) {
    case Conversion::inf_mak: return "MAK";
    case Conversion::inf_ma: return "MA";
    case Conversion::inf_is: return "IS";
    case Conversion::noun_dik:
    case Conversion::adj_dik: return "DIK";
    case Conversion::noun_yacak:
    case Conversion::adj_yacak: return "YACAK";
    case Conversion::adj_yan: return "YAN";
    case Conversion::adj_mis: return "MIS";
    case Conversion::adverb: return adverb;
  }
  return {};
}

ClauseFormSpec select_full_clause_form(ActType type, TenseRel rel, bool is_suffix) {
  ClauseFormSpec s;
  s.outer_case_applies = true;
  switch (type) {
    case ActType::ind_act:
      s.conversion = Conversion::inf_mak;
      break;
    case ActType::def_act:
      s.conversion = is_suffix ? Conversion::inf_is : Conversion::inf_ma;
      s.needs_possessive_agr = true;
      s.subject_case = SubjectCase::genitive;
      break;
    case ActType::fact:
      s.conversion = rel == TenseRel::posterior ? Conversion::noun_yacak : Conversion::noun_dik;
      s.needs_possessive_agr = true;
      s.subject_case = SubjectCase::genitive;
      break;
  }
  return s;
}

std::string_view to_string(TenseClass t) {
  switch (t) {
    case TenseClass::past_present: return "past-present";
    case TenseClass::future: return "future";
    case TenseClass::past_narrative: return "past-narrative";
  }
  return "?";
}

std::optional<TenseClass> parse_tense_class(std::string_view s) {
  if (s == "past-present") return TenseClass::past_present;
  if (s == "future") return TenseClass::future;
  if (s == "past-narrative") return TenseClass::past_narrative;
  return std::nullopt;
}

TenseClass tense_class(const VerbSpec& v) {
  if (v.tense == Tense::future) return TenseClass::future;
  if (v.tense == Tense::past && v.aspect == Aspect::narrative) return TenseClass::past_narrative;
  return TenseClass::past_present;
}

TenseRel tense_rel(const VerbSpec& v) {
  return v.tense == Tense::future ? TenseRel::posterior : TenseRel::prior_or_concurrent;
}

namespace {

ClauseFormSpec subject_participle(TenseClass t) {
  ClauseFormSpec s;
  s.subject_case = SubjectCase::gapped;
  s.conversion = t == TenseClass::future           ? Conversion::adj_yacak
                 : t == TenseClass::past_narrative ? Conversion::adj_mis
                                                   : Conversion::adj_yan;
  return s;
}

ClauseFormSpec object_participle(TenseClass t) {
  ClauseFormSpec s;
  s.conversion = t == TenseClass::future ? Conversion::adj_yacak : Conversion::adj_dik;
  s.needs_possessive_agr = true;
  s.subject_case = SubjectCase::genitive;
  return s;
}

// Plain +yAn/+yAcAk for passive clauses; the surface subject stays nominative.
ClauseFormSpec plain_participle(TenseClass t) {
  ClauseFormSpec s;
  s.conversion = t == TenseClass::future ? Conversion::adj_yacak : Conversion::adj_yan;
  return s;
}

}  // namespace

std::optional<ClauseFormSpec> select_participle(const ParticipleKey& k) {
  if (k.voice == Voice::reflexive || k.voice == Voice::reciprocal) return std::nullopt;
  const TenseClass t = k.tense;
  const bool active = k.voice == Voice::active;
  const bool passive = k.voice == Voice::passive;
  const bool caus = k.voice == Voice::causative;

  if (k.role == GapRole::agent) {
    if (passive) return std::nullopt;
    return subject_participle(t);
  }
  if (t == TenseClass::past_narrative) return std::nullopt;

  switch (k.role) {
    case GapRole::patient:
    case GapRole::theme:
      if (!k.transitive) return std::nullopt;
      return passive ? plain_participle(t) : object_participle(t);

    case GapRole::c_obj:
      if (!caus) return std::nullopt;
      return object_participle(t);

    case GapRole::beneficiary:
    case GapRole::recipient:
      if (!k.transitive) return std::nullopt;
      if (caus && k.role == GapRole::beneficiary) return std::nullopt;
      if (passive) return k.subject_specific.value_or(true) ? object_participle(t) : plain_participle(t);
      return object_participle(t);

    case GapRole::time:
    case GapRole::duration:
      if (passive && !k.transitive)
        return t == TenseClass::future ? plain_participle(t) : object_participle(t);
      [[fallthrough]];
    case GapRole::source:
    case GapRole::goal:
    case GapRole::location:
    case GapRole::place:
      if (active || caus) return object_participle(t);
      if (!k.transitive) return plain_participle(t);
      return k.subject_specific.value_or(true) ? object_participle(t) : plain_participle(t);

    case GapRole::agent:
      break;
  }
  return std::nullopt;
}

ClauseFormSpec select_adverbial(AdvType type) {
  ClauseFormSpec s;
  s.conversion = Conversion::adverb;
  switch (type) {
    case AdvType::as_soon_as: s.adverb = "AORIST-NEG"; s.paired = true; break;
    case AdvType::since: s.adverb = "YALI"; s.paired = true; break;
    case AdvType::as_it_continues: s.adverb = "DIKCA"; break;
    case AdvType::while_: s.adverb = "KEN"; break;
    case AdvType::before:
    case AdvType::without: s.adverb = "MADAN"; break;
    case AdvType::and_then: s.adverb = "YIP"; break;
    case AdvType::by_manner: s.adverb = "YARAK"; break;
    case AdvType::as_if: s.adverb = "CASINA"; break;
    case AdvType::reduplicated: s.adverb = "YA"; s.paired = true; break;
    case AdvType::when: s.adverb = "YINCA"; break;
  }
  return s;
}

Label gap_label(GapRole role, Voice voice, const CaseFrame& clause) {
  switch (role) {
    case GapRole::agent: return Label::subject;
    case GapRole::patient:
    case GapRole::theme: return voice == Voice::passive ? Label::subject : Label::dir_obj;
    case GapRole::source: return Label::source;
    case GapRole::goal: return Label::goal;
    case GapRole::location: return Label::location;
    case GapRole::beneficiary: return Label::beneficiary;
    case GapRole::recipient: return Label::goal;
    case GapRole::c_obj: return clause.has(Label::dir_obj) && !clause.has(Label::goal) ? Label::goal : Label::dir_obj;
    case GapRole::time: return Label::time;
    case GapRole::duration: return Label::duration;
    case GapRole::place: return Label::place;
  }
  return Label::subject;
}

bool clause_transitive(const CaseFrame& clause, GapRole role) {
  if (role == GapRole::patient || role == GapRole::theme) return true;
  if (clause.voice == Voice::passive) return clause.has(Label::subject);
  return clause.has(Label::dir_obj);
}

std::optional<bool> subject_specificity(const CaseFrame& clause) {
  const CName* s = clause.constituent(Label::subject);
  if (!s) return std::nullopt;
  return !is_indefinite(*s);
}

ParticipleKey participle_key(GapRole role, const CaseFrame& clause) {
  ParticipleKey k;
  k.role = role;
  k.voice = clause.voice;
  k.tense = clause.verb ? tense_class(*clause.verb) : TenseClass::past_present;
  k.transitive = clause_transitive(clause, role);
  if (clause.voice == Voice::passive && k.transitive) k.subject_specific = subject_specificity(clause);
  return k;
}

std::vector<ParticipleRow> parse_participle_table(std::string_view text) {
  std::vector<ParticipleRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::istringstream ls(line);
    std::string col;
    while (std::getline(ls, col, '\t')) cols.push_back(col);
    if (cols.size() != 6)
      throw Error("TABLE-SYNTAX", "line " + std::to_string(lineno) + ": expected 6 columns");
    rows.push_back({cols[0], cols[1], cols[2], cols[3], cols[4], cols[5]});
  }
  return rows;
}

std::string participle_form_label(const std::optional<ClauseFormSpec>& spec) {
  if (!spec) return "-";
  switch (spec->conversion) {
    case Conversion::adj_yan: return "+yAn";
    case Conversion::adj_mis: return "+mHS";
    case Conversion::adj_dik: return "+dHk+POSS";
    case Conversion::adj_yacak: return spec->needs_possessive_agr ? "+yAcAk+POSS" : "+yAcAk";
    default: return "?";
  }
}

}  // namespace tactgen
