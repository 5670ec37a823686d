#include "tactgen/pipeline.hpp"

#include "tactgen/clause.hpp"
#include "tactgen/error.hpp"
#include "tactgen/np.hpp"
#include "tactgen/orderer.hpp"

namespace tactgen {

namespace {

SimpleTask simple(std::string cat, std::string root) {
  SimpleTask t;
  t.cat = std::move(cat);
  t.root = std::move(root);
  return t;
}

void append(std::vector<WordTask>& out, std::vector<WordTask> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

bool is_ind_act(const CName& c) {
  if (!c.roles) return false;
  auto* fc = std::get_if<FullClause>(&*c.roles);
  return fc && fc->type == ActType::ind_act;
}

bool is_fact_clause(const CName& c) {
  if (!c.roles) return false;
  auto* fc = std::get_if<FullClause>(&*c.roles);
  return fc && fc->type == ActType::fact;
}

Agreement subject_agr(const CaseFrame& cf) {
  const CName* s = cf.constituent(Label::subject);
  return s ? effective_agr(*s) : Agreement{};
}

std::optional<Agreement> overt_subject_agr(const CaseFrame& cf) {
  const CName* s = cf.constituent(Label::subject);
  if (!s) return std::nullopt;
  return effective_agr(*s);
}

struct Tam {
  std::string tam1;
  std::optional<std::string> tam2;
};

Tam finite_tam(const CaseFrame& cf) {
  switch (cf.speech_act) {
    case SpeechAct::imperative: return {"IMP", {}};
    case SpeechAct::optative: return {"OPT", {}};
    case SpeechAct::necessitative: return {"NECES", {}};
    case SpeechAct::wish: return {"COND", {}};
    default: break;
  }
  const VerbSpec v = cf.verb.value_or(VerbSpec{});
  Tam t;
  if (v.aspect == Aspect::progressive) t.tam1 = "PROG1";
  else if (v.aspect == Aspect::aorist || v.aspect == Aspect::habitual) t.tam1 = "AORIST";
  else if (v.aspect == Aspect::narrative) t.tam1 = "NARR";
  else if (v.tense == Tense::future) t.tam1 = "FUT";
  else if (v.tense == Tense::present) t.tam1 = "AORIST";
  else t.tam1 = "PAST";
  if (v.tense == Tense::past && t.tam1 != "PAST" && t.tam1 != "NARR") t.tam2 = "PAST";
  return t;
}

VerbTask verb_base(const CaseFrame& cf) {
  if (!cf.verb) throw Error("VERB-REQUIRED", "the clause has no verb");
  VerbTask t;
  t.root = cf.verb->root;
  t.voice = cf.voice;
  t.negative = cf.verb->negative;
  t.ability = cf.verb->potential;
  return t;
}

// The finite or converted verb words of a predicative clause.
struct VerbShape {
  std::vector<WordTask> words;
  SubjectCase subject_case = SubjectCase::nominative;
};

VerbShape finite_shape(const CaseFrame& cf, std::optional<std::string> tam2 = std::nullopt) {
  VerbTask t = verb_base(cf);
  Tam tam = finite_tam(cf);
  t.tam1 = tam.tam1;
  t.tam2 = tam2 ? tam2 : tam.tam2;
  auto agr = overt_subject_agr(cf);
  if (!agr && cf.speech_act == SpeechAct::imperative) agr = Agreement{Number::singular, 2};
  t.agr = agr.value_or(Agreement{});
  return {{t}, SubjectCase::nominative};
}

class Realizer final : public ClauseRealizer {
 public:
  explicit Realizer(const Lexicon& lex) : lex_(lex) {}

  std::vector<std::string> warnings;

  std::vector<WordTask> full_clause(const FullClause& fc, const OuterMarks& marks) override {
    const CaseFrame& cf = *fc.arg;
    require_predicative(cf);
    const ClauseFormSpec spec =
        select_full_clause_form(fc.type, tense_rel(cf.verb.value_or(VerbSpec{})), fc.is_suffix);
    VerbTask t = verb_base(cf);
    t.conv = spec.conv_code();
    if (fc.type == ActType::fact) {
      t.form = VerbForm::fact;
      t.poss = subject_agr(cf);
    } else {
      t.form = VerbForm::infinitive;
      if (spec.needs_possessive_agr) t.poss = overt_subject_agr(cf);
    }
    t.case_ = marks.case_;
    t.copula = marks.copula;
    return clause_words(cf, {{t}, spec.subject_case}, std::nullopt);
  }

  std::vector<WordTask> gapped_clause(const GappedModifier& gm, Label omit) override {
    const CaseFrame& cf = *gm.arg;
    require_predicative(cf);
    const ParticipleKey key = participle_key(gm.role, cf);
    auto spec = select_participle(key);
    if (!spec)
      throw Error("NO-PARTICIPLE", "no participle gaps the " + std::string(to_string(gm.role)) + " of a " +
                                       std::string(to_string(key.voice)) + " " +
                                       (key.transitive ? "transitive" : "intransitive") + " " +
                                       std::string(to_string(key.tense)) + " clause");
    VerbTask t = verb_base(cf);
    t.form = VerbForm::participle;
    t.conv = spec->conv_code();
    if (spec->needs_possessive_agr) t.poss = subject_agr(cf);
    return clause_words(cf, {{t}, spec->subject_case}, omit);
  }

  std::vector<WordTask> adverbial_clause(const AdverbialClause& ac) override {
    const CaseFrame& cf = *ac.argument;
    require_predicative(cf);
    const ClauseFormSpec spec = select_adverbial(ac.adv_type);
    const VerbSpec v = cf.verb.value_or(VerbSpec{});
    VerbShape shape;
    VerbTask t = verb_base(cf);
    switch (ac.adv_type) {
      case AdvType::as_soon_as: {
        t.form = VerbForm::finite;
        t.tam1 = "AORIST";
        t.negative = false;
        VerbTask neg = t;
        neg.negative = true;
        shape.words = {t, neg};
        break;
      }
      case AdvType::since: {
        VerbTask past = t;
        past.form = VerbForm::finite;
        past.tam1 = "PAST";
        t.form = VerbForm::adverb;
        t.conv = "YALI";
        shape.words = {past, t};
        break;
      }
      case AdvType::while_:
        t.form = VerbForm::while_;
        t.tam1 = v.aspect == Aspect::progressive ? "PROG1" : "AORIST";
        shape.words = {t};
        break;
      default:
        t.form = VerbForm::adverb;
        t.conv = spec.adverb;
        shape.words = {t};
        if (spec.paired) shape.words.push_back(t);
        break;
    }
    return clause_words(cf, std::move(shape), std::nullopt);
  }

  // Linearized words of a clause with the given verb shape. `omit` names the
  // constituent realized outside the clause (a relative clause gap).
  std::vector<WordTask> clause_words(const CaseFrame& cf, VerbShape shape, std::optional<Label> omit,
                                     bool finite = false) {
    ConstituentSeq seq = order_clause(cf);
    if (cf.es) seq = attach_clitics(std::move(seq), *cf.es);

    std::optional<Copula> copula;
    if (cf.clause_type != ClauseType::predicative) {
      if (!finite) throw Error("UNSUPPORTED", std::string(to_string(cf.clause_type)) +
                                                  " clauses can only be realized as finite sentences");
      const VerbSpec v = cf.verb.value_or(VerbSpec{});
      if (v.tense == Tense::past) copula = Copula{true, subject_agr(cf)};
      if (cf.clause_type == ClauseType::attributive && !copula) copula = Copula{false, subject_agr(cf)};
    }

    std::vector<WordTask> out;
    for (const SeqItem& item : seq.items) {
      if (omit && item.label == *omit) continue;
      std::vector<WordTask> words;
      if (item.label == Label::verb) {
        if (cf.clause_type == ClauseType::predicative) words = shape.words;
        else if (cf.clause_type == ClauseType::existential) words = {existential_word(cf, copula)};
      } else if (!is_pro_drop(*item.np)) {
        words = constituent_words(cf, item.label, *item.np, shape.subject_case, copula);
      }
      append(out, std::move(words));
      for (Clitic c : item.clitics) out.push_back(clitic_word(c));
    }
    if (yes_no_without_site(cf)) {
      for (std::size_t i = out.size(); i-- > 0;) {
        if (std::holds_alternative<VerbTask>(out[i])) {
          out.insert(out.begin() + static_cast<std::ptrdiff_t>(i) + 1, WordTask{simple("CONN", "mH")});
          break;
        }
      }
    }
    return out;
  }

  static bool yes_no_without_site(const CaseFrame& cf) {
    return cf.speech_act == SpeechAct::interrogative && (!cf.ques || cf.ques->type == Question::Type::yes_no) &&
           !(cf.es && cf.es->ques);
  }

  std::vector<WordTask> np_words(const CName& c, const OuterMarks& marks) {
    NPPlan plan = realize_np(c, marks, lex_, this);
    warnings.insert(warnings.end(), plan.warnings.begin(), plan.warnings.end());
    return plan.tasks();
  }

 private:
  static void require_predicative(const CaseFrame& cf) {
    if (cf.clause_type != ClauseType::predicative)
      throw Error("UNSUPPORTED", std::string(to_string(cf.clause_type)) + " clauses cannot be embedded");
  }

  static WordTask clitic_word(Clitic c) {
    switch (c) {
      case Clitic::even: return simple("CONN", "bile");
      case Clitic::too: return simple("CONN", "dA");
      case Clitic::ques: return simple("CONN", "mH");
    }
    return simple("CONN", "dA");
  }

  WordTask existential_word(const CaseFrame& cf, const std::optional<Copula>& copula) {
    NominalTask t;
    t.root = cf.verb && cf.verb->negative ? "yok" : "var";
    t.copula = copula;
    return t;
  }

  std::vector<WordTask> constituent_words(const CaseFrame& cf, Label label, const CName& np, SubjectCase subj,
                                          const std::optional<Copula>& copula) {
    OuterMarks m;
    switch (label) {
      case Label::subject:
        if (subj == SubjectCase::genitive && !is_indefinite(np)) m.case_ = Case::gen;
        if (cf.clause_type == ClauseType::existential) {
          if (const CName* ps = cf.constituent(Label::poss_subj)) m.poss = effective_agr(*ps);
        }
        break;
      case Label::dir_obj:
        m.case_ = is_indefinite(np) || is_ind_act(np) ? Case::nom : Case::acc;
        break;
      case Label::source:
      case Label::path: m.case_ = Case::abl; break;
      case Label::goal:
      case Label::value: m.case_ = Case::dat; break;
      case Label::location:
      case Label::place: m.case_ = Case::loc; break;
      case Label::instrument: m.case_ = Case::ins; break;
      case Label::poss_subj: m.case_ = Case::gen; break;
      case Label::time: m.case_ = time_case(np); break;
      case Label::manner:
        if (np.referent && np.referent->has_arg()) m.case_ = Case::ins;
        break;
      case Label::pred_property: m.copula = copula; break;
      case Label::beneficiary: {
        auto words = np_words(np, m);
        words.push_back(simple("POSTP", "iCin"));
        return words;
      }
      case Label::duration:
      case Label::verb: break;
    }
    return np_words(np, m);
  }

  // Temporal nouns ("gUn", "saat") and non-nominal time expressions stay
  // unmarked; other nominal heads and fact clauses take the locative.
  Case time_case(const CName& np) const {
    if (is_fact_clause(np)) return Case::loc;
    if (!np.referent || !np.referent->has_arg()) return Case::nom;
    if (const auto& b = np.referent->bcon) {
      auto entry = lex_.find_any(b->name);
      return b->sem.apply(entry ? entry->sem : SemFeatures{}).temporal ? Case::nom : Case::loc;
    }
    return Case::loc;
  }

  const Lexicon& lex_;
};

// Resolves a clitic's archiphonemes against the word before it.
std::string harmonize_clitic(std::string_view clitic, std::string_view prev) {
  char last = 'a';
  for (char c : prev)
    if (is_vowel(c)) last = c;
  const bool front = last == 'e' || last == 'i' || last == 'O' || last == 'U';
  const bool round = last == 'o' || last == 'u' || last == 'O' || last == 'U';
  std::string out;
  for (char c : clitic) {
    if (c == 'A') out += front ? 'e' : 'a';
    else if (c == 'H') out += front ? (round ? 'U' : 'i') : (round ? 'u' : 'I');
    else if (c == 'D') out += 'd';
    else out += c;
  }
  return out;
}

std::string punct_text(const std::string& name) {
  if (name == "COMMA") return ",";
  if (name == "QUESTION") return "?";
  return ".";
}

GenerationResult finish(const std::vector<WordTask>& tasks, const Lexicon& lex, std::vector<std::string> warnings,
                        bool sentence) {
  GenerationResult r;
  r.warnings = std::move(warnings);
  for (const WordTask& t : tasks) {
    MorphBundle b = emit_bundle(t);
    std::string token;
    if (b.is_punct()) {
      token = punct_text(b.punct);
    } else if (b.get("CAT") == "CONN" && (b.get("ROOT") == "dA" || b.get("ROOT") == "mH")) {
      token = harmonize_clitic(*b.get("ROOT"), r.tokens.empty() ? std::string_view{} : r.tokens.back());
    } else {
      token = apply_morphographemics(select_morphemes(b, lex));
    }
    r.bundles.push_back(std::move(b));
    r.tokens.push_back(std::move(token));
  }
  r.surface_ascii = join_surface(r.bundles, r.tokens, lex, Script::ascii, sentence);
  r.surface_utf8 = join_surface(r.bundles, r.tokens, lex, Script::utf8, sentence);
  return r;
}

bool wants_question_mark(const CaseFrame& cf) {
  return cf.speech_act == SpeechAct::interrogative || (cf.es && cf.es->ques);
}

void check(const std::vector<Violation>& violations, const GenerateOptions& opts, std::vector<std::string>& warnings) {
  for (const auto& v : violations) {
    if (!opts.force) throw Error(v.rule, v.message, v.path);
    warnings.push_back(v.rule + " at " + v.path + ": " + v.message);
  }
}

}  // namespace

std::string GenerationResult::corpus_format() const {
  std::string out;
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    out += bundles[i].format();
    out += " --> ";
    out += tokens[i];
    out += '\n';
  }
  return out;
}

std::string join_surface(const std::vector<MorphBundle>& bundles, const std::vector<std::string>& tokens,
                         const Lexicon& lex, Script script, bool sentence) {
  std::string out;
  bool sentence_start = sentence;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const MorphBundle& b = bundles[i];
    std::string word = script == Script::utf8 ? transliterate(tokens[i], Script::utf8) : tokens[i];
    if (b.is_punct()) {
      out += word;
      if (b.punct != "COMMA") sentence_start = sentence;
      continue;
    }
    if (script == Script::utf8) {
      auto root = b.get("ROOT");
      bool proper = root && lex.lookup(*root, LexCategory::proper_noun).has_value();
      if (sentence_start || proper) word = capitalize_utf8(word);
    }
    if (!out.empty()) out += ' ';
    out += word;
    sentence_start = false;
  }
  return out;
}

GenerationResult generate(const ComplexSentence& cs, const Lexicon& lex, const GenerateOptions& opts) {
  std::vector<std::string> warnings;
  check(validate(cs, lex), opts, warnings);

  Realizer r(lex);
  std::vector<WordTask> tasks;
  bool question = false;
  for (const ComplexPart& part : order_complex(cs)) {
    switch (part.kind) {
      case ComplexPart::Kind::comma:
        tasks.push_back(simple("PUNCT", "COMMA"));
        continue;
      case ComplexPart::Kind::conjunction:
        tasks.push_back(simple("CONN", part.word));
        continue;
      case ComplexPart::Kind::clause:
        break;
    }
    const CaseFrame& cf = *part.clause;
    question = question || wants_question_mark(cf);
    if (part.link_relation == "cause-result") {
      if (cf.clause_type != ClauseType::predicative)
        throw Error("UNSUPPORTED", "a cause-result link needs a predicative first clause");
      VerbTask t = verb_base(cf);
      t.form = VerbForm::fact;
      t.conv = select_full_clause_form(ActType::fact, tense_rel(cf.verb.value_or(VerbSpec{}))).conv_code();
      t.poss = subject_agr(cf);
      append(tasks, r.clause_words(cf, {{t}, SubjectCase::nominative}, std::nullopt, true));
      tasks.push_back(simple("POSTP", "iCin"));
    } else if (part.link_relation == "conditional") {
      append(tasks, r.clause_words(cf, finite_shape(cf, "COND"), std::nullopt, true));
    } else {
      VerbShape shape;
      if (cf.clause_type == ClauseType::predicative) shape = finite_shape(cf);
      append(tasks, r.clause_words(cf, std::move(shape), std::nullopt, true));
    }
  }
  tasks.push_back(simple("PUNCT", question ? "QUESTION" : "PERIOD"));
  warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
  return finish(tasks, lex, std::move(warnings), true);
}

GenerationResult generate(std::string_view text, const Lexicon& lex, const GenerateOptions& opts) {
  ParseOutcome parsed = parse_case_frame_detailed(text);
  GenerationResult r = generate(parsed.sentence, lex, opts);
  r.warnings.insert(r.warnings.begin(), parsed.warnings.begin(), parsed.warnings.end());
  return r;
}

GenerationResult generate_np(const CName& c, const Lexicon& lex, Case case_, const GenerateOptions& opts) {
  std::vector<std::string> warnings;
  check(validate(c, lex), opts, warnings);
  Realizer r(lex);
  OuterMarks m;
  m.case_ = case_;
  auto tasks = r.np_words(c, m);
  warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
  return finish(tasks, lex, std::move(warnings), false);
}

GenerationResult generate_np(std::string_view text, const Lexicon& lex, Case case_, const GenerateOptions& opts) {
  std::vector<std::string> warnings;
  CName c = parse_c_name(text, &warnings);
  GenerationResult r = generate_np(c, lex, case_, opts);
  r.warnings.insert(r.warnings.begin(), warnings.begin(), warnings.end());
  return r;
}

std::vector<BatchItem> generate_batch(const std::vector<std::pair<std::string, std::string>>& inputs,
                                      const Lexicon& lex, const GenerateOptions& opts) {
  std::vector<BatchItem> out;
  out.reserve(inputs.size());
  for (const auto& [name, text] : inputs) {
    BatchItem item;
    item.name = name;
    try {
      item.result = generate(text, lex, opts);
      item.ok = true;
    } catch (const Error& e) {
      item.error_code = e.code();
      item.error_message = e.what();
    }
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace tactgen
