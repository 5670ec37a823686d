#pragma once

#include <span>
#include <vector>

#include "tactgen/caseframe.hpp"

namespace tactgen {

enum class Clitic { even, too, ques };

struct SeqItem {
  Label label = Label::verb;
  const CName* np = nullptr;          // null for the verb item
  const VerbSpec* verb = nullptr;     // set for the verb item
  std::vector<Clitic> clitics;
};

struct ConstituentSeq {
  std::vector<SeqItem> items;
  std::vector<Label> labels() const;
};

// Default constituent order per clause type; each list ends with the verb.
std::span<const Label> default_order(ClauseType type);

// Linearizes one clause: topic, remaining defaults, focus, verb, background.
// Throws IS-CONFLICT or UNSUPPORTED-VOICE.
ConstituentSeq order_clause(const CaseFrame& cf);

// Marks items named by the emphasis sites. Throws MISSING-CONSTITUENT.
ConstituentSeq attach_clitics(ConstituentSeq seq, const EmphasisSites& es);

// A flattened complex sentence: clause sequences interleaved with connective words.
struct ComplexPart {
  enum class Kind { clause, conjunction, comma };
  Kind kind = Kind::clause;
  const CaseFrame* clause = nullptr;
  std::string word;           // conjunction root
  std::string link_relation;  // set on the first argument of a linked pair
};

std::vector<ComplexPart> order_complex(const ComplexSentence& cs);

// Maps "and"/"or" and their Turkish forms to the conjunction root.
std::string conjunction_root(std::string_view conj);

}  // namespace tactgen
