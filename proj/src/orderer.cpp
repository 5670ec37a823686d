#include "tactgen/orderer.hpp"

#include <algorithm>
#include <array>

#include "tactgen/error.hpp"

namespace tactgen {

namespace {

constexpr std::array kPredicative{
    Label::subject, Label::time,     Label::place,      Label::dir_obj,  Label::beneficiary,
    Label::source,  Label::goal,     Label::location,   Label::instrument, Label::value,
    Label::path,    Label::duration, Label::manner,     Label::verb};
constexpr std::array kExistential{Label::poss_subj, Label::time, Label::place, Label::subject, Label::verb};
constexpr std::array kAttributive{Label::subject, Label::time, Label::place, Label::pred_property, Label::verb};

std::string label_name(Label l) { return std::string(to_string(l)); }

Error conflict(const std::string& why) { return Error("IS-CONFLICT", why); }

}  // namespace

std::vector<Label> ConstituentSeq::labels() const {
  std::vector<Label> out;
  out.reserve(items.size());
  for (const auto& it : items) out.push_back(it.label);
  return out;
}

std::span<const Label> default_order(ClauseType type) {
  switch (type) {
    case ClauseType::predicative: return kPredicative;
    case ClauseType::existential: return kExistential;
    case ClauseType::attributive: return kAttributive;
  }
  return kPredicative;
}

ConstituentSeq order_clause(const CaseFrame& cf) {
  if (cf.voice == Voice::reflexive || cf.voice == Voice::reciprocal)
    throw Error("UNSUPPORTED-VOICE", std::string(to_string(cf.voice)) + " voice cannot be realized");

  // The anchor sits at the end of the clause: the verb, plus the subject of an
  // existential or the predicate of an attributive clause.
  std::optional<Label> anchor;
  if (cf.clause_type == ClauseType::existential) anchor = Label::subject;
  if (cf.clause_type == ClauseType::attributive) anchor = Label::pred_property;
  if (anchor && !cf.has(*anchor)) anchor.reset();

  InformationStructure is = cf.is.value_or(InformationStructure{});
  auto present = [&](std::optional<Label> l) { return l && *l != Label::verb && cf.has(*l); };
  if (!present(is.topic)) is.topic.reset();
  if (!present(is.focus)) is.focus.reset();
  if (!present(is.background)) is.background.reset();

  if (anchor && is.topic == anchor) {
    bool others = false;
    for (Label l : default_order(cf.clause_type))
      if (l != *anchor && l != Label::verb && cf.has(l)) others = true;
    if (others) throw conflict(label_name(*anchor) + " must stay next to the verb and cannot be the topic");
  }
  if (anchor && is.focus == anchor) is.focus.reset();

  if (cf.clause_type == ClauseType::predicative) {
    const CName* obj = cf.constituent(Label::dir_obj);
    if (obj && is_indefinite(*obj)) {
      if (is.topic == Label::dir_obj || is.background == Label::dir_obj)
        throw conflict("an indefinite dir-obj must be immediately preverbal");
      if (is.focus && *is.focus != Label::dir_obj)
        throw conflict("focus on " + label_name(*is.focus) + " competes with the indefinite dir-obj for the preverbal slot");
      is.focus = Label::dir_obj;
    }
  }

  auto marked = [&](Label l) { return l == is.topic || l == is.focus || l == is.background; };
  ConstituentSeq seq;
  auto push = [&](Label l) {
    SeqItem item;
    item.label = l;
    if (l == Label::verb) {
      item.verb = cf.verb ? &*cf.verb : nullptr;
    } else {
      item.np = cf.constituent(l);
    }
    seq.items.push_back(std::move(item));
  };

  if (is.topic) push(*is.topic);
  for (Label l : default_order(cf.clause_type)) {
    if (l == Label::verb || l == anchor || marked(l) || !cf.has(l)) continue;
    push(l);
  }
  if (is.focus) push(*is.focus);
  if (anchor && !marked(*anchor)) push(*anchor);
  push(Label::verb);
  if (is.background) push(*is.background);
  return seq;
}

ConstituentSeq attach_clitics(ConstituentSeq seq, const EmphasisSites& es) {
  auto mark = [&](const std::optional<Label>& l, Clitic c) {
    if (!l) return;
    for (auto& it : seq.items) {
      if (it.label == *l) {
        it.clitics.push_back(c);
        return;
      }
    }
    throw Error("MISSING-CONSTITUENT", "emphasis names " + label_name(*l) + ", which the clause does not contain");
  };
  mark(es.even, Clitic::even);
  mark(es.too, Clitic::too);
  mark(es.ques, Clitic::ques);
  return seq;
}

std::string conjunction_root(std::string_view conj) {
  if (conj == "and" || conj == "ve") return "ve";
  if (conj == "or" || conj == "veya") return "veya";
  if (conj == "but" || conj == "ama") return "ama";
  return std::string(conj);
}

namespace {

void flatten(const ComplexSentence& cs, std::vector<ComplexPart>& out) {
  if (auto* cf = std::get_if<CaseFrame>(&cs.node)) {
    ComplexPart p;
    p.clause = cf;
    out.push_back(p);
    return;
  }
  if (auto* conj = std::get_if<Conjoined>(&cs.node)) {
    const auto n = conj->elements.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) {
        ComplexPart sep;
        if (i + 1 == n) {
          sep.kind = ComplexPart::Kind::conjunction;
          sep.word = conjunction_root(conj->conj);
        } else {
          sep.kind = ComplexPart::Kind::comma;
        }
        out.push_back(sep);
      }
      flatten(conj->elements[i], out);
    }
    return;
  }
  const auto& link = std::get<Linked>(cs.node);
  if (link.relation != "cause-result" && link.relation != "conditional")
    throw Error("UNKNOWN-LINK", "no realization for link relation '" + link.relation + "'");
  const auto* first = std::get_if<CaseFrame>(&link.arg1->node);
  if (!first)
    throw Error("UNKNOWN-LINK", "the first argument of a " + link.relation + " link must be a single clause");
  ComplexPart p;
  p.clause = first;
  p.link_relation = link.relation;
  out.push_back(p);
  flatten(*link.arg2, out);
}

}  // namespace

std::vector<ComplexPart> order_complex(const ComplexSentence& cs) {
  std::vector<ComplexPart> out;
  flatten(cs, out);
  return out;
}

}  // namespace tactgen
