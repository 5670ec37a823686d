#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tactgen/caseframe.hpp"
#include "tactgen/lexicon.hpp"
#include "tactgen/morph.hpp"

namespace tactgen {

enum class NPKind {
  set_spec,
  possessor,
  spec_rel,
  dem,
  quantifier,
  clause,
  mod_rel,
  ordinal,
  quan_mod,
  qualitative,
  article,
  classifier,
  head,
  punct_comma,
  particle
};

std::string_view to_string(NPKind k);

struct NPWord {
  NPKind kind = NPKind::head;
  WordTask task;
};

struct HeadMarks {
  Agreement agr;
  std::optional<Agreement> poss;
  Case case_ = Case::nom;
  friend bool operator==(const HeadMarks&, const HeadMarks&) = default;
};

struct NPPlan {
  std::vector<NPWord> words;
  HeadMarks head_marks;
  std::vector<std::string> warnings;

  std::vector<WordTask> tasks() const;
};

// Marks the surrounding structure imposes on the NP's head word.
struct OuterMarks {
  Case case_ = Case::nom;
  bool rel = false;                       // +ki after the case (specifying relation)
  std::optional<std::string> derivation;  // LI, SIZ, LIK on a mod-rel argument
  std::optional<Copula> copula;           // attributive predicate
  std::optional<Agreement> poss;          // possessive forced by the caller
};

// Embedded clauses are realized by the caller through this interface.
class ClauseRealizer {
 public:
  virtual ~ClauseRealizer() = default;
  // Act or fact clause standing in for a whole NP; the converted verb takes `marks`.
  virtual std::vector<WordTask> full_clause(const FullClause& fc, const OuterMarks& marks) = 0;
  // Relative clause whose gap (the label `omit`) is filled by the modified head.
  virtual std::vector<WordTask> gapped_clause(const GappedModifier& gm, Label omit) = 0;
  virtual std::vector<WordTask> adverbial_clause(const AdverbialClause& ac) = 0;
};

NPPlan realize_np(const CName& c, const OuterMarks& marks, const Lexicon& lex,
                  ClauseRealizer* clauses = nullptr);

inline NPPlan realize_np(const CName& c, Case case_, const Lexicon& lex, ClauseRealizer* clauses = nullptr) {
  OuterMarks m;
  m.case_ = case_;
  return realize_np(c, m, lex, clauses);
}

// Head-drop realization; requires referent.drop. Throws NOTHING-TO-SUBSTITUTE.
NPPlan resolve_head_drop(const CName& c, const OuterMarks& marks, const Lexicon& lex,
                         ClauseRealizer* clauses = nullptr);

std::vector<WordTask> realize_quantity(const Quantity& q, const SemFeatures& head_sem, const Lexicon& lex,
                                       std::vector<std::string>* warnings = nullptr);

std::vector<WordTask> realize_mod_rel(const ModRel& m, const Lexicon& lex, ClauseRealizer* clauses = nullptr);

struct PossessorWords {
  std::vector<WordTask> words;
  std::optional<Agreement> head_poss;
  bool after_head = false;
};

PossessorWords realize_possessor(const Possessor& p, const Lexicon& lex, ClauseRealizer* clauses = nullptr);

// The head root of an NP, following nested referent lists and gap fillers.
std::optional<std::string> head_root(const CName& c);

// Agreement of the NP's head after resolving gap fillers and conjunctions.
Agreement effective_agr(const CName& c);

// True when the NP has no overt material (a pro-dropped pronoun).
bool is_pro_drop(const CName& c);

}  // namespace tactgen
