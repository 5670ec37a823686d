#include "tactgen/np.hpp"

#include <algorithm>

#include "tactgen/clause.hpp"
#include "tactgen/error.hpp"
#include "tactgen/orderer.hpp"

namespace tactgen {

std::string_view to_string(NPKind k) {
  switch (k) {
    case NPKind::set_spec: return "set-spec";
    case NPKind::possessor: return "possessor";
    case NPKind::spec_rel: return "spec-rel";
    case NPKind::dem: return "dem";
    case NPKind::quantifier: return "quantifier";
    case NPKind::clause: return "clause";
    case NPKind::mod_rel: return "mod-rel";
    case NPKind::ordinal: return "ordinal";
    case NPKind::quan_mod: return "quan-mod";
    case NPKind::qualitative: return "qualitative";
    case NPKind::article: return "article";
    case NPKind::classifier: return "classifier";
    case NPKind::head: return "head";
    case NPKind::punct_comma: return "punct-comma";
    case NPKind::particle: return "particle";
  }
  return "?";
}

std::vector<WordTask> NPPlan::tasks() const {
  std::vector<WordTask> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(w.task);
  return out;
}

namespace {

SimpleTask simple(std::string cat, std::string root, std::optional<std::string> type = std::nullopt) {
  SimpleTask t;
  t.cat = std::move(cat);
  t.root = std::move(root);
  t.type = std::move(type);
  return t;
}

SimpleTask comma() { return simple("PUNCT", "COMMA"); }

Agreement singular(Agreement a) {
  a.number = Number::singular;
  return a;
}

bool numeric_quantity(const CName& c) {
  if (!c.modifier || !c.modifier->quan_mod) return false;
  return !std::holds_alternative<FuzzyQuantity>(*c.modifier->quan_mod);
}

const CName* gap_filler(const CName& c) {
  if (!c.roles) return nullptr;
  const auto* gm = std::get_if<GappedModifier>(&*c.roles);
  if (!gm || (c.referent && c.referent->has_arg())) return nullptr;
  const CaseFrame& cl = *gm->arg;
  return cl.constituent(gap_label(gm->role, cl.voice, cl));
}

// Words grouped by NP slot; the head-drop pass works on whole slots.
struct Slot {
  NPKind kind;
  std::vector<WordTask> words;
};

class Builder {
 public:
  Builder(const Lexicon& lex, ClauseRealizer* clauses) : lex_(lex), clauses_(clauses) {}

  NPPlan realize(const CName& c, const OuterMarks& m, std::vector<WordTask> rel_words = {}) {
    if (c.conj_list) return conjunction(*c.conj_list, m);
    if (c.property) return property(*c.property, m);
    if (c.determiner) {
      NPPlan p;
      p.words.push_back({NPKind::quantifier, simple("ADJ", *c.determiner, "DETERMINER")});
      p.head_marks.case_ = m.case_;
      return p;
    }
    if (c.roles) {
      if (auto* fc = std::get_if<FullClause>(&*c.roles)) return full_clause(*fc, m);
      if (auto* ac = std::get_if<AdverbialClause>(&*c.roles)) {
        NPPlan p;
        for (auto& w : need_clauses().adverbial_clause(*ac)) p.words.push_back({NPKind::clause, std::move(w)});
        return p;
      }
      return gapped(c, std::get<GappedModifier>(*c.roles), m);
    }
    return standard(c, m, std::move(rel_words));
  }

  std::vector<std::string> warnings;

 private:
  ClauseRealizer& need_clauses() {
    if (!clauses_) throw Error("UNSUPPORTED", "embedded clauses need a clause realizer");
    return *clauses_;
  }

  NPPlan conjunction(const ConjList& cl, const OuterMarks& m) {
    NPPlan p;
    const auto n = cl.elements.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) {
        if (i + 1 == n) p.words.push_back({NPKind::particle, simple("CONN", conjunction_root(cl.conj))});
        else p.words.push_back({NPKind::punct_comma, comma()});
      }
      OuterMarks em;
      if (i + 1 == n) em = m;
      NPPlan sub = realize(cl.elements[i], em);
      p.words.insert(p.words.end(), sub.words.begin(), sub.words.end());
      if (i + 1 == n) p.head_marks = sub.head_marks;
    }
    return p;
  }

  std::vector<WordTask> intensifier_words(const SProp& sp) {
    std::vector<WordTask> out;
    if (!sp.intensifier) return out;
    if (auto* d = std::get_if<Degree>(&*sp.intensifier)) {
      out.push_back(simple("ADVERB", d->degree));
    } else {
      const auto& cmp = std::get<PComparative>(*sp.intensifier);
      if (cmp.comparator == "kadar") {
        append(out, realize(*cmp.arg, plain(Case::nom)).tasks());
        out.push_back(simple("POSTP", "kadar"));
      } else {
        append(out, realize(*cmp.arg, plain(Case::abl)).tasks());
        out.push_back(simple("ADVERB", cmp.comparator));
      }
    }
    return out;
  }

  NPPlan property(const SProp& sp, const OuterMarks& m) {
    NPPlan p;
    for (auto& w : intensifier_words(sp)) p.words.push_back({NPKind::qualitative, std::move(w)});
    SimpleTask adj = simple("ADJ", sp.p_name);
    adj.copula = m.copula;
    p.words.push_back({NPKind::head, adj});
    p.head_marks.case_ = m.case_;
    return p;
  }

  NPPlan full_clause(const FullClause& fc, const OuterMarks& m) {
    NPPlan p;
    for (auto& w : need_clauses().full_clause(fc, m)) p.words.push_back({NPKind::clause, std::move(w)});
    p.head_marks.case_ = m.case_;
    return p;
  }

  NPPlan gapped(const CName& c, const GappedModifier& gm, const OuterMarks& m) {
    const CaseFrame& cl = *gm.arg;
    const Label omit = gap_label(gm.role, cl.voice, cl);
    CName filler;
    if (c.referent && c.referent->has_arg()) {
      filler = c;
      filler.roles.reset();
    } else {
      const CName* f = cl.constituent(omit);
      if (!f)
        throw Error("GAP-FILLER-MISSING", "the " + std::string(to_string(gm.role)) +
                                              " gap has no filler: the clause lacks " + std::string(to_string(omit)));
      filler = *f;
      if (c.classifier) filler.classifier = c.classifier;
      if (c.modifier) filler.modifier = c.modifier;
      if (c.specifier) filler.specifier = c.specifier;
      if (c.possessor) filler.possessor = c.possessor;
      if (c.referent && filler.referent) {
        filler.referent->drop = filler.referent->drop || c.referent->drop;
        if (c.referent->poss) filler.referent->poss = c.referent->poss;
      }
    }
    return realize(filler, m, need_clauses().gapped_clause(gm, omit));
  }

  static OuterMarks plain(Case cs) {
    OuterMarks m;
    m.case_ = cs;
    return m;
  }

  static void append(std::vector<WordTask>& out, const std::vector<WordTask>& more) {
    out.insert(out.end(), more.begin(), more.end());
  }

  SemFeatures head_sem(const CName& c) {
    if (!c.referent || !c.referent->bcon) return {};
    const auto& b = *c.referent->bcon;
    auto entry = lex_.find_any(b.name);
    return b.sem.apply(entry ? entry->sem : SemFeatures{});
  }

  std::vector<WordTask> ordinal_words_for(const Ordinal& o) {
    std::vector<WordTask> out;
    if (o.intensifier) out.push_back(simple("ADVERB", "en"));
    if (!o.word.empty()) {
      out.push_back(simple("ADJ", o.word, "ORDINAL"));
      return out;
    }
    auto words = ordinal_words(o.number);
    for (std::size_t i = 0; i < words.size(); ++i)
      out.push_back(simple("ADJ", words[i], i + 1 == words.size() ? "ORDINAL" : "CARDINAL"));
    return out;
  }

  std::vector<WordTask> qualitative_words(const SProp& sp) {
    auto out = intensifier_words(sp);
    out.push_back(simple("ADJ", sp.p_name));
    return out;
  }

  NominalTask head_task(const std::string& root, const HeadMarks& hm, const OuterMarks& m) {
    NominalTask t;
    t.root = root;
    t.pronoun = lex_.lookup(root, LexCategory::pronoun).has_value();
    t.agr = t.pronoun ? hm.agr : Agreement{hm.agr.number, 3};
    t.poss = hm.poss;
    t.case_ = hm.case_;
    t.rel = m.rel;
    t.derivation = m.derivation;
    t.copula = m.copula;
    return t;
  }

  NPPlan standard(const CName& c, const OuterMarks& m, std::vector<WordTask> rel_words) {
    NPPlan plan;
    const bool has_arg = c.referent && c.referent->has_arg();
    const bool drop = c.referent && c.referent->drop;

    HeadMarks hm;
    hm.agr = referent_agr(c);
    if (numeric_quantity(c)) hm.agr = singular(hm.agr);
    hm.case_ = m.case_;

    std::vector<Slot> slots;
    std::vector<WordTask> moved_possessor;

    if (c.specifier && !c.specifier->set_spec.empty()) {
      Slot s{NPKind::set_spec, {}};
      for (const auto& a : c.specifier->set_spec) append(s.words, realize(a, plain(Case::abl)).tasks());
      slots.push_back(std::move(s));
    }

    std::optional<Agreement> possessor_agr;
    if (c.possessor) {
      PossessorWords pw = realize_possessor(*c.possessor, lex_, clauses_);
      possessor_agr = pw.head_poss;
      if (pw.after_head) moved_possessor = std::move(pw.words);
      else if (!pw.words.empty()) slots.push_back({NPKind::possessor, std::move(pw.words)});
    }

    if (c.specifier && c.specifier->spec_rel) {
      const auto& sr = *c.specifier->spec_rel;
      Slot s{NPKind::spec_rel, {}};
      if (sr.relation == "location") {
        OuterMarks loc = plain(Case::loc);
        loc.rel = true;
        for (const auto& a : sr.argument) append(s.words, realize(a, loc).tasks());
      } else {
        auto entry = lex_.lookup(sr.relation, LexCategory::postposition);
        Case sub = entry && entry->postp_subcat ? *entry->postp_subcat : Case::nom;
        for (const auto& a : sr.argument) append(s.words, realize(a, plain(sub)).tasks());
        s.words.push_back(simple("POSTP", sr.relation));
      }
      slots.push_back(std::move(s));
    }

    if (c.specifier) {
      const auto& sp = *c.specifier;
      Slot dem{NPKind::dem, {}};
      for (const auto& d : sp.dem) dem.words.push_back(simple("ADJ", d, "DEMONSTRATIVE"));
      Slot quant{NPKind::quantifier, {}};
      std::optional<DemOrder> order = sp.dem_order;
      if (sp.quan && sp.quan->quantifier) {
        quant.words.push_back(simple("ADJ", *sp.quan->quantifier, "DETERMINER"));
        if (!order) {
          auto e = lex_.lookup(*sp.quan->quantifier, LexCategory::quantifier);
          if (e && e->quant) order = e->quant->dem_order;
        }
      }
      bool quant_first = order == DemOrder::quant_before_dem;
      if (quant_first && !quant.words.empty()) slots.push_back(std::move(quant));
      if (!dem.words.empty()) slots.push_back(std::move(dem));
      if (!quant_first && !quant.words.empty()) slots.push_back(std::move(quant));
    }

    if (!rel_words.empty()) slots.push_back({NPKind::clause, std::move(rel_words)});

    if (c.modifier) {
      const auto& md = *c.modifier;
      const bool emphasis = md.emphasis.has_value();
      Slot mod_rel{NPKind::mod_rel, {}};
      for (std::size_t i = 0; i < md.mod_rel.size(); ++i) {
        if (i > 0 && emphasis) mod_rel.words.push_back(comma());
        append(mod_rel.words, realize_mod_rel(md.mod_rel[i], lex_, clauses_));
      }
      Slot ordinal{NPKind::ordinal, {}};
      if (md.ordinal) ordinal.words = ordinal_words_for(*md.ordinal);
      Slot quan{NPKind::quan_mod, {}};
      if (md.quan_mod) quan.words = realize_quantity(*md.quan_mod, head_sem(c), lex_, &warnings);
      Slot qual{NPKind::qualitative, {}};
      for (const auto& sp : md.qualitative) append(qual.words, qualitative_words(sp));

      if (!mod_rel.words.empty()) {
        slots.push_back(std::move(mod_rel));
        if (emphasis && !quan.words.empty()) slots.push_back({NPKind::punct_comma, {comma()}});
      }
      if (!ordinal.words.empty()) slots.push_back(std::move(ordinal));
      if (md.emphasis == Emphasis::quantitative) {
        if (!qual.words.empty()) slots.push_back(std::move(qual));
        if (!quan.words.empty()) slots.push_back(std::move(quan));
      } else {
        if (!quan.words.empty()) slots.push_back(std::move(quan));
        if (!qual.words.empty()) slots.push_back(std::move(qual));
      }
    }

    if (c.specifier && c.specifier->quan && !c.specifier->quan->quantifier &&
        c.specifier->quan->definite == false && c.specifier->quan->referential == true && !numeric_quantity(c)) {
      slots.push_back({NPKind::article, {simple("ADJ", "bir", "DETERMINER")}});
    }

    // Possessive marking on the head.
    if (m.poss) hm.poss = m.poss;
    else if (c.referent && c.referent->poss) hm.poss = c.referent->poss;
    else if (possessor_agr) hm.poss = possessor_agr;
    else if (c.classifier && !drop) hm.poss = Agreement{};
    else if (c.specifier && !c.specifier->set_spec.empty()) hm.poss = Agreement{};

    if (c.classifier && !drop) {
      slots.push_back({NPKind::classifier, realize(*c.classifier, plain(Case::nom)).tasks()});
    }

    if (drop) {
      substitute(slots, hm, m);
    } else if (has_arg) {
      if (c.referent->bcon) {
        if (lex_.lookup(c.referent->bcon->name, LexCategory::pronoun) && c.specifier)
          throw Error("UNSUPPORTED", "pronoun heads cannot take specifiers");
        slots.push_back({NPKind::head, {head_task(c.referent->bcon->name, hm, m)}});
      } else {
        // A list referent: the inner NP carries this NP's head marks.
        OuterMarks inner = m;
        inner.poss = hm.poss;
        const auto& list = c.referent->list;
        Slot head{NPKind::head, {}};
        for (std::size_t i = 0; i < list.size(); ++i) {
          if (i > 0) head.words.push_back(comma());
          NPPlan sub = realize(list[i], i + 1 == list.size() ? inner : plain(Case::nom));
          append(head.words, sub.tasks());
          if (i + 1 == list.size()) hm = sub.head_marks;
        }
        slots.push_back(std::move(head));
      }
    } else if (!slots.empty()) {
      // No head noun: the last element carries the head marks.
      substitute(slots, hm, m);
    }

    if (!moved_possessor.empty()) slots.push_back({NPKind::possessor, std::move(moved_possessor)});

    for (auto& s : slots) {
      for (auto& w : s.words) {
        auto* st = std::get_if<SimpleTask>(&w);
        NPKind kind = st && st->cat == "PUNCT" ? NPKind::punct_comma : s.kind;
        plan.words.push_back({kind, std::move(w)});
      }
    }
    plan.head_marks = hm;
    return plan;
  }

  void substitute(std::vector<Slot>& slots, const HeadMarks& hm, const OuterMarks& m) {
    Slot* sub = nullptr;
    for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
      if (it->kind == NPKind::article || it->kind == NPKind::punct_comma || it->kind == NPKind::set_spec) continue;
      sub = &*it;
      break;
    }
    if (!sub || sub->words.empty())
      throw Error("NOTHING-TO-SUBSTITUTE", "the head is dropped but nothing can stand in for it");
    WordTask& last = sub->words.back();
    switch (sub->kind) {
      case NPKind::possessor:
      case NPKind::spec_rel: {
        auto* n = std::get_if<NominalTask>(&last);
        if (!n) throw Error("NOTHING-TO-SUBSTITUTE", "the " + std::string(to_string(sub->kind)) + " cannot take +ki");
        n->rel = true;
        n->ki_agr = Agreement{hm.agr.number, 3};
        n->ki_case = hm.case_;
        n->copula = m.copula;
        return;
      }
      case NPKind::dem: {
        NominalTask t;
        t.root = std::get<SimpleTask>(last).root;
        t.pronoun = true;
        t.agr = Agreement{hm.agr.number, 3};
        t.case_ = hm.case_;
        t.copula = m.copula;
        last = t;
        return;
      }
      case NPKind::quantifier:
      case NPKind::ordinal:
      case NPKind::quan_mod:
      case NPKind::qualitative: {
        auto* s = std::get_if<SimpleTask>(&last);
        if (!s) break;
        NominalTask t;
        t.root = s->root;
        t.agr = Agreement{hm.agr.number, 3};
        t.poss = hm.poss;
        t.case_ = hm.case_;
        t.rel = m.rel;
        t.derivation = m.derivation;
        t.copula = m.copula;
        last = t;
        return;
      }
      default:
        break;
    }
    throw Error("NOTHING-TO-SUBSTITUTE",
                "a " + std::string(to_string(sub->kind)) + " cannot stand in for a dropped head");
  }

  const Lexicon& lex_;
  ClauseRealizer* clauses_;
};

}  // namespace

NPPlan realize_np(const CName& c, const OuterMarks& marks, const Lexicon& lex, ClauseRealizer* clauses) {
  Builder b(lex, clauses);
  NPPlan p = b.realize(c, marks);
  p.warnings.insert(p.warnings.end(), b.warnings.begin(), b.warnings.end());
  return p;
}

NPPlan resolve_head_drop(const CName& c, const OuterMarks& marks, const Lexicon& lex, ClauseRealizer* clauses) {
  if (!c.referent || !c.referent->drop) throw Error("NOTHING-TO-SUBSTITUTE", "the head is not marked for drop");
  return realize_np(c, marks, lex, clauses);
}

std::vector<WordTask> realize_quantity(const Quantity& q, const SemFeatures& head_sem, const Lexicon& lex,
                                       std::vector<std::string>* warnings) {
  std::vector<WordTask> out;
  auto number = [&](const NumberQuantity& n) {
    auto add_words = [&](int v) {
      if (v < 0 || v > 999) {
        if (warnings) warnings->push_back("number " + std::to_string(v) + " rendered as digits");
        out.push_back(simple("ADJ", std::to_string(v), "CARDINAL"));
        return;
      }
      for (auto& w : number_words(v)) out.push_back(simple("ADJ", w, "CARDINAL"));
    };
    auto limit = [&](const char* word) {
      out.push_back(simple("ADVERB", "en"));
      out.push_back(simple("ADJ", word));
    };
    if (n.formal_low) limit("az");
    else if (n.formal_high && !n.high) limit("Cok");
    add_words(n.low);
    if (n.high) {
      if (n.formal_high) limit("Cok");
      add_words(*n.high);
    }
  };
  auto unit_words = [&](const CName& unit) {
    Builder b(lex, nullptr);
    OuterMarks m;
    auto plan = b.realize(unit, m);
    for (auto& w : plan.words) out.push_back(std::move(w.task));
  };

  if (auto* n = std::get_if<NumberQuantity>(&q)) {
    number(*n);
    if (n->formal_card) out.push_back(simple("NOUN-LIKE", "tane"));
  } else if (auto* m = std::get_if<MeasureQuantity>(&q)) {
    number(m->quantity);
    if (m->unit) {
      auto e = head_root(*m->unit);
      auto entry = e ? lex.find_any(*e) : std::nullopt;
      if (warnings && entry && !entry->sem.measure) warnings->push_back("unit '" + *e + "' is not a measure noun");
      unit_words(*m->unit);
    }
    if (m->approx) out.push_back(simple("POSTP", "civarInda"));
  } else if (auto* cf = std::get_if<ContainerFull>(&q)) {
    number(cf->quantity);
    if (cf->unit) {
      auto e = head_root(*cf->unit);
      auto entry = e ? lex.find_any(*e) : std::nullopt;
      if (warnings && entry && !entry->sem.container)
        warnings->push_back("unit '" + *e + "' is not a container noun");
      unit_words(*cf->unit);
    }
    if (cf->dolusu) out.push_back(simple("ADJ", "dolusu"));
  } else {
    const auto& f = std::get<FuzzyQuantity>(q);
    out.push_back(simple("ADJ", f.f_quan));
    if (f.formal_quantity) out.push_back(simple("ADVERB", head_sem.countable ? "sayIda" : "miktarda"));
  }
  for (auto& w : out) {
    if (auto* s = std::get_if<SimpleTask>(&w); s && s->cat == "NOUN-LIKE") s->cat = "ADJ";
  }
  return out;
}

std::vector<WordTask> realize_mod_rel(const ModRel& m, const Lexicon& lex, ClauseRealizer* clauses) {
  std::vector<WordTask> out;
  auto args = [&](const OuterMarks& marks) {
    for (const auto& a : m.argument) {
      auto plan = realize_np(a, marks, lex, clauses);
      for (auto& w : plan.words) out.push_back(std::move(w.task));
    }
  };
  OuterMarks marks;
  if (m.relation == "made-of") {
    marks.case_ = Case::abl;
  } else if (m.relation == "with") {
    marks.derivation = "LI";
  } else if (m.relation == "without") {
    marks.derivation = "SIZ";
  } else if (m.relation == "made-on") {
    marks.case_ = Case::loc;
  } else if (m.relation == "of") {
    if (!m.measure) throw Error("UNSUPPORTED", "the 'of' relation needs a measure argument");
    if (m.measure->approx) throw Error("OF-WITH-APPROX", "an 'of' measure cannot be approximate");
    out = realize_quantity(*m.measure, SemFeatures{}, lex);
    if (out.empty()) return out;
    auto& last = out.back();
    if (auto* n = std::get_if<NominalTask>(&last)) {
      n->derivation = "LIK";
    } else if (auto* s = std::get_if<SimpleTask>(&last)) {
      NominalTask t;
      t.root = s->root;
      t.derivation = "LIK";
      last = t;
    }
    return out;
  } else {
    auto entry = lex.lookup(m.relation, LexCategory::postposition);
    if (!entry) throw Error("UNKNOWN-RELATION", "no realization for modifying relation '" + m.relation + "'");
    marks.case_ = entry->postp_subcat.value_or(Case::nom);
    args(marks);
    out.push_back(simple("POSTP", m.relation));
    return out;
  }
  args(marks);
  return out;
}

PossessorWords realize_possessor(const Possessor& p, const Lexicon& lex, ClauseRealizer* clauses) {
  PossessorWords out;
  out.after_head = p.move;
  if (!p.argument.empty()) out.head_poss = effective_agr(p.argument.back());
  if (p.drop) return out;
  for (const auto& a : p.argument) {
    auto plan = realize_np(a, Case::gen, lex, clauses);
    for (auto& w : plan.words) out.words.push_back(std::move(w.task));
  }
  return out;
}

std::optional<std::string> head_root(const CName& c) {
  if (c.conj_list && !c.conj_list->elements.empty()) return head_root(c.conj_list->elements.back());
  if (c.referent && c.referent->bcon) return c.referent->bcon->name;
  if (c.referent && !c.referent->list.empty()) return head_root(c.referent->list.back());
  if (const CName* f = gap_filler(c)) return head_root(*f);
  if (c.property) return c.property->p_name;
  return std::nullopt;
}

Agreement effective_agr(const CName& c) {
  if (c.conj_list && c.conj_list->elements.size() > 1) {
    Agreement a;
    a.number = Number::plural;
    a.person = 3;
    for (const auto& e : c.conj_list->elements) a.person = std::min(a.person, effective_agr(e).person);
    return a;
  }
  if (c.referent && c.referent->agr) return *c.referent->agr;
  if (c.referent && !c.referent->list.empty()) return effective_agr(c.referent->list.back());
  if (const CName* f = gap_filler(c)) return effective_agr(*f);
  return referent_agr(c);
}

bool is_pro_drop(const CName& c) {
  return !c.conj_list && !c.property && !c.determiner && !c.roles && !(c.referent && c.referent->has_arg()) &&
         !c.modifier && !c.specifier && !c.possessor && !c.classifier;
}

}  // namespace tactgen
