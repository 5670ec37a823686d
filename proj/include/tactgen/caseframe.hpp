#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tactgen/box.hpp"
#include "tactgen/lexicon.hpp"

namespace tactgen {

// Labels naming the constituents of a clause, the verb included.
enum class Label {
  subject,
  dir_obj,
  source,
  goal,
  location,
  beneficiary,
  instrument,
  value,
  poss_subj,
  pred_property,
  time,
  place,
  manner,
  path,
  duration,
  verb
};

std::string_view to_string(Label l);
std::optional<Label> parse_label(std::string_view s);

enum class Number { singular, plural };

struct Agreement {
  Number number = Number::singular;
  int person = 3;

  friend bool operator==(const Agreement&, const Agreement&) = default;
};

// "1SG", "3PL", ...
std::string agreement_code(const Agreement& a);

struct SemOverride {
  std::optional<bool> temporal;
  std::optional<bool> container;
  std::optional<bool> measure;
  std::optional<bool> countable;
  std::optional<bool> material;

  bool empty() const {
    return !temporal && !container && !measure && !countable && !material;
  }
  SemFeatures apply(SemFeatures base) const;

  friend bool operator==(const SemOverride&, const SemOverride&) = default;
};

struct BCon {
  std::string name;
  SemOverride sem;

  friend bool operator==(const BCon&, const BCon&) = default;
};

struct CName;
struct CaseFrame;

struct Referent {
  std::optional<BCon> bcon;  // arg given as a b-con
  std::vector<CName> list;      // arg given as a list of c-names
  std::optional<Agreement> agr;
  std::optional<Agreement> poss;  // explicit possessive marking on the head
  bool drop = false;

  bool has_arg() const { return bcon.has_value() || !list.empty(); }
  friend bool operator==(const Referent&, const Referent&);
};

enum class GapRole {
  agent,
  patient,
  theme,
  source,
  goal,
  location,
  beneficiary,
  c_obj,
  recipient,
  time,
  duration,
  place
};
std::string_view to_string(GapRole r);
std::optional<GapRole> parse_gap_role(std::string_view s);

enum class ActType { ind_act, def_act, fact };
std::string_view to_string(ActType a);

enum class AdvType {
  as_soon_as,
  since,
  as_it_continues,
  while_,
  before,
  without,
  and_then,
  by_manner,
  as_if,
  reduplicated,
  when
};
std::string_view to_string(AdvType a);
std::optional<AdvType> parse_adv_type(std::string_view s);

struct GappedModifier {
  GapRole role = GapRole::agent;
  Box<CaseFrame> arg;
  friend bool operator==(const GappedModifier&, const GappedModifier&) = default;
};

struct FullClause {
  ActType type = ActType::fact;
  bool is_suffix = false;  // def-act realized with +Hş instead of +mA
  Box<CaseFrame> arg;
  friend bool operator==(const FullClause&, const FullClause&) = default;
};

struct AdverbialClause {
  AdvType adv_type = AdvType::when;
  Box<CaseFrame> argument;
  friend bool operator==(const AdverbialClause&, const AdverbialClause&) = default;
};

using RoleSpec = std::variant<GappedModifier, FullClause, AdverbialClause>;

struct NumberQuantity {
  int low = 1;
  std::optional<int> high;
  bool formal_card = false;
  bool formal_low = false;
  bool formal_high = false;
  friend bool operator==(const NumberQuantity&, const NumberQuantity&) = default;
};

struct MeasureQuantity {
  NumberQuantity quantity;
  Box<CName> unit;
  bool approx = false;
  friend bool operator==(const MeasureQuantity&, const MeasureQuantity&) = default;
};

struct ContainerFull {
  NumberQuantity quantity;
  Box<CName> unit;
  bool dolusu = false;
  friend bool operator==(const ContainerFull&, const ContainerFull&) = default;
};

struct FuzzyQuantity {
  std::string f_quan;
  bool formal_quantity = false;
  friend bool operator==(const FuzzyQuantity&, const FuzzyQuantity&) = default;
};

using Quantity = std::variant<NumberQuantity, MeasureQuantity, ContainerFull, FuzzyQuantity>;

struct Degree {
  std::string degree;
  friend bool operator==(const Degree&, const Degree&) = default;
};

struct PComparative {
  std::string comparator;  // daha | kadar
  Box<CName> arg;
  friend bool operator==(const PComparative&, const PComparative&) = default;
};

struct SProp {
  std::string p_name;
  std::optional<std::variant<Degree, PComparative>> intensifier;
  friend bool operator==(const SProp&, const SProp&) = default;
};

struct ModRel {
  std::string relation;
  std::vector<CName> argument;
  std::optional<MeasureQuantity> measure;  // argument of the "of" relation
  friend bool operator==(const ModRel&, const ModRel&);
};

struct Ordinal {
  int number = 0;    // positive integer order, or 0 when `word` is used
  std::string word;  // ilk | sonuncu
  bool intensifier = false;
  friend bool operator==(const Ordinal&, const Ordinal&) = default;
};

enum class Emphasis { quantitative, qualitative };

struct ModifierBlock {
  std::vector<ModRel> mod_rel;
  std::optional<Ordinal> ordinal;
  std::optional<Quantity> quan_mod;
  std::vector<SProp> qualitative;
  std::optional<Emphasis> emphasis;
  friend bool operator==(const ModifierBlock&, const ModifierBlock&) = default;
};

struct SpecRel {
  std::string relation;  // "location" or a postposition root
  std::vector<CName> argument;
  friend bool operator==(const SpecRel&, const SpecRel&);
};

struct Quan {
  std::optional<std::string> quantifier;
  std::optional<bool> definite;
  std::optional<bool> referential;
  std::optional<bool> specific;
  friend bool operator==(const Quan&, const Quan&) = default;
};

struct SpecifierBlock {
  std::vector<CName> set_spec;
  std::optional<SpecRel> spec_rel;
  std::vector<std::string> dem;
  std::optional<Quan> quan;
  std::optional<DemOrder> dem_order;  // order requested by the input, checked against the lexicon
  friend bool operator==(const SpecifierBlock&, const SpecifierBlock&);
};

struct Possessor {
  std::vector<CName> argument;
  bool drop = false;
  bool move = false;
  friend bool operator==(const Possessor&, const Possessor&);
};

struct ConjList {
  std::string conj;
  std::vector<CName> elements;
  friend bool operator==(const ConjList&, const ConjList&);
};

struct CName {
  std::optional<Referent> referent;
  Box<CName> classifier;
  std::optional<RoleSpec> roles;
  std::optional<ModifierBlock> modifier;
  std::optional<SpecifierBlock> specifier;
  std::optional<Possessor> possessor;
  std::optional<ConjList> conj_list;
  std::optional<SProp> property;          // bare adjectival constituent
  std::optional<std::string> determiner;  // bare quantifier constituent ("her")

  friend bool operator==(const CName&, const CName&) = default;
};

enum class SForm { finite, inf_ind_act, inf_def_act, adverbial, participle };
enum class ClauseType { predicative, existential, attributive };
enum class Voice { active, passive, causative, reflexive, reciprocal };
enum class SpeechAct { declarative, interrogative, imperative, optative, necessitative, wish };
enum class Tense { past, present, future };
enum class Aspect { perfect, progressive, aorist, habitual, narrative };

std::string_view to_string(SForm v);
std::string_view to_string(ClauseType v);
std::string_view to_string(Voice v);
std::string_view to_string(SpeechAct v);
std::string_view to_string(Tense v);
std::string_view to_string(Aspect v);

struct Question {
  enum class Type { yes_no, wh };
  Type type = Type::yes_no;
  std::vector<Label> constituents;
  friend bool operator==(const Question&, const Question&) = default;
};

struct VerbSpec {
  std::string root;
  bool negative = false;
  std::optional<Tense> tense;
  std::optional<Aspect> aspect;
  bool potential = false;
  friend bool operator==(const VerbSpec&, const VerbSpec&) = default;
};

struct InformationStructure {
  std::optional<Label> topic;
  std::optional<Label> focus;
  std::optional<Label> background;
  friend bool operator==(const InformationStructure&, const InformationStructure&) = default;
};

struct EmphasisSites {
  std::optional<Label> even;
  std::optional<Label> too;
  std::optional<Label> ques;
  bool empty() const { return !even && !too && !ques; }
  friend bool operator==(const EmphasisSites&, const EmphasisSites&) = default;
};

struct CaseFrame {
  SForm s_form = SForm::finite;
  ClauseType clause_type = ClauseType::predicative;
  Voice voice = Voice::active;
  SpeechAct speech_act = SpeechAct::declarative;
  std::optional<Question> ques;
  std::optional<VerbSpec> verb;
  std::map<Label, CName> arguments;
  std::map<Label, CName> adjuncts;
  std::optional<InformationStructure> is;
  std::optional<EmphasisSites> es;
  std::string rel;  // attributive relation, e.g. "is-a"

  // Argument or adjunct with the given label.
  const CName* constituent(Label l) const;
  bool has(Label l) const { return constituent(l) != nullptr; }

  friend bool operator==(const CaseFrame&, const CaseFrame&) = default;
};

struct ComplexSentence;

struct Conjoined {
  std::string conj;
  std::vector<ComplexSentence> elements;
  friend bool operator==(const Conjoined&, const Conjoined&);
};

struct Linked {
  std::string relation;
  Box<ComplexSentence> arg1;
  Box<ComplexSentence> arg2;
  friend bool operator==(const Linked&, const Linked&) = default;
};

struct ComplexSentence {
  std::variant<CaseFrame, Conjoined, Linked> node;
  friend bool operator==(const ComplexSentence&, const ComplexSentence&) = default;
};

// ---------------------------------------------------------------------------
// Parsing and serialization

struct ParseOutcome {
  ComplexSentence sentence;
  std::vector<std::string> warnings;
};

ParseOutcome parse_case_frame_detailed(std::string_view text);
ComplexSentence parse_case_frame(std::string_view text);

// Parses a single noun-phrase feature structure.
CName parse_c_name(std::string_view text, std::vector<std::string>* warnings = nullptr);

std::string serialize(const ComplexSentence& cs);
std::string serialize(const CName& c);

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string path;
  std::string rule;
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::vector<Violation> validate(const ComplexSentence& cs, const Lexicon& lex);
std::vector<Violation> validate(const CName& c, const Lexicon& lex);

enum class Subtype { no_spec, no_spec_qual, no_spec_no_mod };
bool subtype_check(const CName& c, Subtype required);

// ---------------------------------------------------------------------------
// Helpers shared by the realization stages

// Effective agreement of an NP's referent (3SG when unspecified).
Agreement referent_agr(const CName& c);

// True when the NP is explicitly indefinite (quan.definite = -).
bool is_indefinite(const CName& c);

// The embedded clause of a RoleSpec.
const CaseFrame& role_clause(const RoleSpec& r);

}  // namespace tactgen
