#include <algorithm>
#include <set>

#include "tactgen/caseframe.hpp"

namespace tactgen {
namespace {

const std::set<Label> kPredicativeArgs{Label::subject,  Label::dir_obj,     Label::source,
                                       Label::goal,     Label::location,    Label::beneficiary,
                                       Label::instrument, Label::value};
const std::set<Label> kExistentialArgs{Label::subject, Label::poss_subj};
const std::set<Label> kAttributiveArgs{Label::subject, Label::pred_property};
const std::set<Label> kAdjunctLabels{Label::time, Label::place, Label::manner, Label::path, Label::duration};

class Validator {
 public:
  explicit Validator(const Lexicon& lex) : lex_(lex) {}

  void sentence(const ComplexSentence& cs, const std::string& path) {
    if (const auto* cf = std::get_if<CaseFrame>(&cs.node)) {
      case_frame(*cf, path);
    } else if (const auto* conj = std::get_if<Conjoined>(&cs.node)) {
      if (conj->elements.size() < 2)
        add(path + "/elements", "CONJ-ARITY", "a conjoined sentence needs at least two elements");
      for (std::size_t i = 0; i < conj->elements.size(); ++i)
        sentence(conj->elements[i], path + "/elements/" + std::to_string(i));
    } else {
      const auto& l = std::get<Linked>(cs.node);
      if (l.arg1) sentence(*l.arg1, path + "/arg1");
      if (l.arg2) sentence(*l.arg2, path + "/arg2");
    }
  }

  void case_frame(const CaseFrame& cf, const std::string& path) {
    if (!cf.verb || cf.verb->root.empty()) add(path + "/verb", "VERB-REQUIRED", "the verb is obligatory");

    const std::set<Label>* allowed = &kPredicativeArgs;
    if (cf.clause_type == ClauseType::existential) allowed = &kExistentialArgs;
    if (cf.clause_type == ClauseType::attributive) allowed = &kAttributiveArgs;
    for (const auto& [label, c] : cf.arguments) {
      std::string sub = path + "/arguments/" + std::string(to_string(label));
      if (!allowed->count(label))
        add(sub, "CLAUSE-LABEL",
            std::string(to_string(label)) + " is not an argument of a " + std::string(to_string(cf.clause_type)) +
                " clause");
      c_name(c, sub);
    }
    for (const auto& [label, c] : cf.adjuncts) {
      std::string sub = path + "/adjuncts/" + std::string(to_string(label));
      if (!kAdjunctLabels.count(label)) add(sub, "CLAUSE-LABEL", std::string(to_string(label)) + " is not an adjunct");
      c_name(c, sub);
    }

    auto present = [&](Label l) { return l == Label::verb || cf.has(l); };
    if (cf.is) {
      std::vector<std::pair<std::string, std::optional<Label>>> slots{
          {"topic", cf.is->topic}, {"focus", cf.is->focus}, {"background", cf.is->background}};
      std::set<Label> seen;
      for (const auto& [name, l] : slots) {
        if (!l) continue;
        std::string sub = path + "/control/is/" + name;
        if (*l == Label::verb || !cf.has(*l))
          add(sub, "IS-UNKNOWN-LABEL", std::string(to_string(*l)) + " is not a constituent of this clause");
        if (!seen.insert(*l).second)
          add(sub, "IS-DUPLICATE", std::string(to_string(*l)) + " has more than one information-structure role");
      }
    }
    if (cf.es) {
      std::vector<std::pair<std::string, std::optional<Label>>> slots{
          {"even", cf.es->even}, {"too", cf.es->too}, {"ques", cf.es->ques}};
      for (const auto& [name, l] : slots)
        if (l && !present(*l))
          add(path + "/control/es/" + name, "ES-UNKNOWN-LABEL",
              std::string(to_string(*l)) + " is not a constituent of this clause");
    }
    if (cf.ques)
      for (Label l : cf.ques->constituents)
        if (!present(l))
          add(path + "/ques/const", "ES-UNKNOWN-LABEL", std::string(to_string(l)) + " is not a constituent of this clause");
  }

  void c_name(const CName& c, const std::string& path) {
    const LexEntry* head = nullptr;
    LexEntry head_entry;
    if (c.referent && c.referent->bcon) {
      if (auto e = lex_.find_any(c.referent->bcon->name)) {
        head_entry = *e;
        head_entry.sem = c.referent->bcon->sem.apply(head_entry.sem);
        head = &head_entry;
      }
    }

    if (c.referent)
      for (std::size_t i = 0; i < c.referent->list.size(); ++i) {
        std::string sub = path + "/referent/arg/" + std::to_string(i);
        subtype(c.referent->list[i], Subtype::no_spec_no_mod, sub);
        c_name(c.referent->list[i], sub);
      }

    if (c.classifier) {
      subtype(*c.classifier, Subtype::no_spec_qual, path + "/classifier");
      c_name(*c.classifier, path + "/classifier");
    }

    if (c.roles) roles(*c.roles, path);

    if (c.modifier) modifier(*c.modifier, path + "/modifier");
    if (c.specifier) specifier(c, head, path + "/specifier");

    if (c.possessor) {
      const Possessor& p = *c.possessor;
      for (std::size_t i = 0; i < p.argument.size(); ++i)
        c_name(p.argument[i], path + "/possessor/argument" + (p.argument.size() > 1 ? "/" + std::to_string(i) : ""));
      if (c.referent && c.referent->poss && p.argument.size() == 1) {
        Agreement owner = referent_agr(p.argument.front());
        if (!(owner == *c.referent->poss))
          add(path + "/possessor", "POSS-AGR",
              "possessor agreement " + agreement_code(owner) + " differs from the possessive marker " +
                  agreement_code(*c.referent->poss));
      }
    }

    if (c.conj_list) {
      if (c.conj_list->elements.size() < 2)
        add(path + "/elements", "CONJ-ARITY", "a conjoined noun phrase needs at least two elements");
      for (std::size_t i = 0; i < c.conj_list->elements.size(); ++i)
        c_name(c.conj_list->elements[i], path + "/elements/" + std::to_string(i));
    }

    if (c.property) s_prop(*c.property, path);
  }

  std::vector<Violation> take() {
    std::stable_sort(out_.begin(), out_.end(), [](const Violation& a, const Violation& b) { return a.path < b.path; });
    return std::move(out_);
  }

 private:
  void add(std::string path, std::string rule, std::string message) {
    if (path.empty()) path = "/";
    out_.push_back(Violation{std::move(path), std::move(rule), std::move(message)});
  }

  void subtype(const CName& c, Subtype required, const std::string& path) {
    if (subtype_check(c, required)) return;
    static constexpr const char* kNames[] = {"c-name-no-spec", "c-name-no-spec-qual", "c-name-no-spec-no-mod"};
    add(path, "SUBTYPE", std::string("expected ") + kNames[static_cast<int>(required)]);
  }

  void roles(const RoleSpec& r, const std::string& path) {
    std::string sub = path + "/roles";
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, GappedModifier>) {
            if (v.arg->s_form != SForm::participle)
              add(sub, "GAPPED-SFORM", "a gapped clause must have s-form participle");
            case_frame(*v.arg, sub + "/arg");
          } else if constexpr (std::is_same_v<T, FullClause>) {
            if (v.type != ActType::fact && v.arg->s_form != SForm::inf_ind_act && v.arg->s_form != SForm::inf_def_act)
              add(sub, "GAPPED-SFORM", "an act clause must have an infinitival s-form");
            case_frame(*v.arg, sub + "/arg");
          } else {
            case_frame(*v.argument, path + "/argument");
          }
        },
        r);
  }

  void number(const NumberQuantity& n, const std::string& path) {
    if (n.low < 1) add(path, "NUMBER-RANGE", "low must be at least 1");
    if (n.high && *n.high <= n.low) add(path, "NUMBER-RANGE", "high must exceed low");
  }

  void quantity(const Quantity& q, const std::string& path) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, NumberQuantity>) {
            number(v, path);
          } else if constexpr (std::is_same_v<T, MeasureQuantity> || std::is_same_v<T, ContainerFull>) {
            number(v.quantity, path + "/quantity");
            if (v.unit) c_name(*v.unit, path + "/unit");
          }
        },
        q);
  }

  void s_prop(const SProp& p, const std::string& path) {
    if (!p.intensifier) return;
    LexEntry adj = lex_.entry_or_default(p.p_name, LexCategory::adjective);
    if (!adj.gradable) add(path + "/intensifier", "NOT-GRADABLE", "'" + p.p_name + "' is not gradable");
    if (const auto* d = std::get_if<Degree>(&*p.intensifier)) {
      if ((d->degree == "acIk" || d->degree == "koyu") && !adj.color)
        add(path + "/intensifier", "NOT-COLOR", "'" + d->degree + "' needs a colour adjective");
    } else {
      const auto& cmp = std::get<PComparative>(*p.intensifier);
      if (cmp.arg) c_name(*cmp.arg, path + "/intensifier/arg");
    }
  }

  void modifier(const ModifierBlock& m, const std::string& path) {
    for (std::size_t i = 0; i < m.mod_rel.size(); ++i) {
      const ModRel& r = m.mod_rel[i];
      std::string sub = path + "/mod-rel" + (m.mod_rel.size() > 1 ? "/" + std::to_string(i) : "");
      if (r.relation == "of") {
        if (r.measure && r.measure->approx) add(sub, "OF-WITH-APPROX", "the of relation does not take approx");
        if (r.measure) quantity(*r.measure, sub + "/argument");
      }
      for (std::size_t j = 0; j < r.argument.size(); ++j) {
        std::string arg_path = sub + "/argument" + (r.argument.size() > 1 ? "/" + std::to_string(j) : "");
        if (r.relation == "with") subtype(r.argument[j], Subtype::no_spec, arg_path);
        if (r.relation == "without" || r.relation == "made-on")
          subtype(r.argument[j], Subtype::no_spec_qual, arg_path);
        c_name(r.argument[j], arg_path);
      }
    }
    if (m.ordinal && m.ordinal->intensifier && m.ordinal->number > 0)
      add(path + "/ordinal", "ORDINAL-INTENSIFIER", "only ilk and sonuncu take an intensifier");
    if (m.quan_mod) quantity(*m.quan_mod, path + "/quan-mod");
    for (std::size_t i = 0; i < m.qualitative.size(); ++i)
      s_prop(m.qualitative[i], path + "/qualitative" + (m.qualitative.size() > 1 ? "/" + std::to_string(i) : ""));
  }

  static bool semantically_plural(const CName& c) {
    if (c.conj_list) return true;
    if (referent_agr(c).number == Number::plural) return true;
    if (c.modifier && c.modifier->quan_mod) {
      if (const auto* n = std::get_if<NumberQuantity>(&*c.modifier->quan_mod)) return n->low > 1 || n->high;
    }
    return false;
  }

  void specifier(const CName& c, const LexEntry* head, const std::string& path) {
    const SpecifierBlock& s = *c.specifier;
    for (std::size_t i = 0; i < s.set_spec.size(); ++i) {
      std::string sub = path + "/set-spec" + (s.set_spec.size() > 1 ? "/" + std::to_string(i) : "");
      if (!semantically_plural(s.set_spec[i])) add(sub, "SET-SPEC-PLURAL", "a set specifier must denote a plural set");
      c_name(s.set_spec[i], sub);
    }
    if (s.spec_rel)
      for (std::size_t i = 0; i < s.spec_rel->argument.size(); ++i)
        c_name(s.spec_rel->argument[i],
               path + "/spec-rel/argument" + (s.spec_rel->argument.size() > 1 ? "/" + std::to_string(i) : ""));

    if (!s.quan || !s.quan->quantifier) return;
    const std::string& root = *s.quan->quantifier;
    auto q = lex_.lookup(root, LexCategory::quantifier);
    if (!q || !q->quant) return;
    const QuantifierInfo& info = *q->quant;
    std::string qpath = path + "/quan";
    Number n = referent_agr(c).number;

    if (info.head_number == HeadNumber::requires_singular && n == Number::plural)
      add(qpath, "QUANT-NUMBER", "'" + root + "' requires a singular head");
    if (info.head_number == HeadNumber::requires_plural && n == Number::singular)
      add(qpath, "QUANT-NUMBER", "'" + root + "' requires a plural head");
    if (head) {
      if (info.head_countability == HeadCountability::countable && !head->sem.countable)
        add(qpath, "QUANT-COUNT", "'" + root + "' requires a countable head");
      if (info.head_countability == HeadCountability::uncountable && head->sem.countable)
        add(qpath, "QUANT-COUNT", "'" + root + "' requires an uncountable head");
    }
    if (c.modifier && c.modifier->quan_mod && !info.allows_cardinal)
      add(qpath, "QUANT-CARD", "'" + root + "' cannot co-occur with a quantitative modifier");
    if (!s.dem.empty()) {
      if (!info.allows_demonstrative)
        add(qpath, "QUANT-DEM", "'" + root + "' cannot co-occur with a demonstrative");
      else if (s.dem_order && *s.dem_order != info.dem_order)
        add(path + "/control/dem-order", "QUANT-DEM-ORDER",
            "'" + root + "' fixes the order of demonstrative and quantifier");
    }
  }

  const Lexicon& lex_;
  std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> validate(const ComplexSentence& cs, const Lexicon& lex) {
  Validator v(lex);
  v.sentence(cs, "");
  return v.take();
}

std::vector<Violation> validate(const CName& c, const Lexicon& lex) {
  Validator v(lex);
  v.c_name(c, "");
  return v.take();
}

bool subtype_check(const CName& c, Subtype required) {
  if (c.specifier || c.possessor) return false;
  if (required == Subtype::no_spec) return true;
  if (c.modifier) {
    if (required == Subtype::no_spec_no_mod) return false;
    if (!c.modifier->mod_rel.empty() || c.modifier->ordinal) return false;
  }
  return true;
}

}  // namespace tactgen
