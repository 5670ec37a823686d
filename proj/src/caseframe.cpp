#include "tactgen/caseframe.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>

#include "tactgen/error.hpp"
#include "tactgen/sexpr.hpp"

namespace tactgen {

// Out-of-line defaulted comparisons for types that hold vectors of the then
// incomplete CName / ComplexSentence.
bool operator==(const Referent&, const Referent&) = default;
bool operator==(const ModRel&, const ModRel&) = default;
bool operator==(const SpecRel&, const SpecRel&) = default;
bool operator==(const SpecifierBlock&, const SpecifierBlock&) = default;
bool operator==(const Possessor&, const Possessor&) = default;
bool operator==(const ConjList&, const ConjList&) = default;
bool operator==(const Conjoined&, const Conjoined&) = default;

namespace {

template <class E, std::size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

constexpr NameTable<Label, 16> kLabels{{
    {Label::subject, "subject"},
    {Label::dir_obj, "dir-obj"},
    {Label::source, "source"},
    {Label::goal, "goal"},
    {Label::location, "location"},
    {Label::beneficiary, "beneficiary"},
    {Label::instrument, "instrument"},
    {Label::value, "value"},
    {Label::poss_subj, "poss-subj"},
    {Label::pred_property, "pred-property"},
    {Label::time, "time"},
    {Label::place, "place"},
    {Label::manner, "manner"},
    {Label::path, "path"},
    {Label::duration, "duration"},
    {Label::verb, "verb"},
}};

constexpr NameTable<GapRole, 12> kGapRoles{{
    {GapRole::agent, "agent"},
    {GapRole::patient, "patient"},
    {GapRole::theme, "theme"},
    {GapRole::source, "source"},
    {GapRole::goal, "goal"},
    {GapRole::location, "location"},
    {GapRole::beneficiary, "beneficiary"},
    {GapRole::c_obj, "c-obj"},
    {GapRole::recipient, "recipient"},
    {GapRole::time, "time"},
    {GapRole::duration, "duration"},
    {GapRole::place, "place"},
}};

constexpr NameTable<AdvType, 11> kAdvTypes{{
    {AdvType::as_soon_as, "as-soon-as"},
    {AdvType::since, "since"},
    {AdvType::as_it_continues, "as-it-continues"},
    {AdvType::while_, "while"},
    {AdvType::before, "before"},
    {AdvType::without, "without"},
    {AdvType::and_then, "and-then"},
    {AdvType::by_manner, "by-manner"},
    {AdvType::as_if, "as-if"},
    {AdvType::reduplicated, "reduplicated"},
    {AdvType::when, "when"},
}};

constexpr NameTable<ActType, 3> kActTypes{{
    {ActType::ind_act, "ind-act"},
    {ActType::def_act, "def-act"},
    {ActType::fact, "fact"},
}};

constexpr NameTable<SForm, 5> kSForms{{
    {SForm::finite, "finite"},
    {SForm::inf_ind_act, "inf-ind-act"},
    {SForm::inf_def_act, "inf-def-act"},
    {SForm::adverbial, "adverbial"},
    {SForm::participle, "participle"},
}};

constexpr NameTable<ClauseType, 3> kClauseTypes{{
    {ClauseType::predicative, "predicative"},
    {ClauseType::existential, "existential"},
    {ClauseType::attributive, "attributive"},
}};

constexpr NameTable<Voice, 5> kVoices{{
    {Voice::active, "active"},
    {Voice::passive, "passive"},
    {Voice::causative, "causative"},
    {Voice::reflexive, "reflexive"},
    {Voice::reciprocal, "reciprocal"},
}};

constexpr NameTable<SpeechAct, 6> kSpeechActs{{
    {SpeechAct::declarative, "declarative"},
    {SpeechAct::interrogative, "interrogative"},
    {SpeechAct::imperative, "imperative"},
    {SpeechAct::optative, "optative"},
    {SpeechAct::necessitative, "necessitative"},
    {SpeechAct::wish, "wish"},
}};

constexpr NameTable<Tense, 3> kTenses{{
    {Tense::past, "past"},
    {Tense::present, "present"},
    {Tense::future, "future"},
}};

constexpr NameTable<Aspect, 5> kAspects{{
    {Aspect::perfect, "perfect"},
    {Aspect::progressive, "progressive"},
    {Aspect::aorist, "aorist"},
    {Aspect::habitual, "habitual"},
    {Aspect::narrative, "narrative"},
}};

template <class E, std::size_t N>
std::string_view name_of(const NameTable<E, N>& table, E value) {
  for (const auto& [k, v] : table)
    if (k == value) return v;
  return "?";
}

template <class E, std::size_t N>
std::optional<E> value_of(const NameTable<E, N>& table, std::string_view name) {
  for (const auto& [k, v] : table)
    if (v == name) return k;
  return std::nullopt;
}

std::string normalize(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '_') out += '-';
    else out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string trim_copy(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

// ---------------------------------------------------------------------------
// Reading

class FrameReader {
 public:
  explicit FrameReader(std::vector<std::string>* warnings) : warnings_(warnings) {}

  ComplexSentence sentence(const SExpr& node, const std::string& path) {
    const auto pairs = frame_pairs(node, path);
    std::optional<std::string> type;
    for (const SExpr* p : pairs)
      if (key(*p) == "type") type = normalize(scalar(*p, path));
    if (type == "conj" || type == "conjoined") return ComplexSentence{conjoined(pairs, path)};
    if (type == "linked") return ComplexSentence{linked(pairs, path)};
    if (type) throw Error("TYPE-MISMATCH", "unknown sentence type '" + *type + "'", path);
    return ComplexSentence{case_frame(node, path)};
  }

  CaseFrame case_frame(const SExpr& node, const std::string& path) {
    CaseFrame cf;
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "s-form") cf.s_form = enum_value(kSForms, *p, sub);
      else if (k == "clause-type") cf.clause_type = enum_value(kClauseTypes, *p, sub);
      else if (k == "voice") cf.voice = enum_value(kVoices, *p, sub);
      else if (k == "speech-act") cf.speech_act = enum_value(kSpeechActs, *p, sub);
      else if (k == "rel") cf.rel = normalize(scalar(*p, sub));
      else if (k == "verb") cf.verb = verb(frame_value(*p, sub), sub);
      else if (k == "arguments") labelled(frame_value(*p, sub), sub, cf.arguments);
      else if (k == "adjuncts") labelled(frame_value(*p, sub), sub, cf.adjuncts);
      else if (k == "control") control(frame_value(*p, sub), sub, cf);
      else if (k == "ques") cf.ques = question(frame_value(*p, sub), sub);
      else warn(sub, k);
    }
    return cf;
  }

  CName c_name(const SExpr& node, const std::string& path) {
    CName c;
    std::optional<AdvType> adv;
    std::optional<CaseFrame> adv_arg;
    SProp prop;
    bool has_prop = false;
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "referent") referent(frame_value(*p, sub), sub, c);
      else if (k == "classifier") c.classifier = c_name(frame_value(*p, sub), sub);
      else if (k == "roles") c.roles = roles(frame_value(*p, sub), sub);
      else if (k == "modifier") c.modifier = modifier(frame_value(*p, sub), sub);
      else if (k == "specifier") c.specifier = specifier(frame_value(*p, sub), sub);
      else if (k == "possessor") c.possessor = possessor(frame_value(*p, sub), sub);
      else if (k == "conj") {
        if (!c.conj_list) c.conj_list.emplace();
        c.conj_list->conj = normalize(scalar(*p, sub));
      } else if (k == "elements") {
        if (!c.conj_list) c.conj_list.emplace();
        c.conj_list->elements = c_names(*p, sub);
      } else if (k == "adv-type") {
        adv = value_of(kAdvTypes, normalize(scalar(*p, sub)));
        if (!adv) throw Error("TYPE-MISMATCH", "unknown adverbial type '" + scalar(*p, sub) + "'", sub);
      } else if (k == "argument") {
        adv_arg = case_frame(frame_value(*p, sub), sub);
      } else if (k == "p-name") {
        prop.p_name = trim_copy(scalar(*p, sub));
        has_prop = true;
      } else if (k == "intensifier") {
        prop.intensifier = intensifier(frame_value(*p, sub), sub);
        has_prop = true;
      } else if (k == "quantifier") {
        c.determiner = quantifier_root(*p, sub);
      } else {
        warn(sub, k);
      }
    }
    if (adv) {
      if (!adv_arg) throw Error("TYPE-MISMATCH", "adverbial clause without argument", path);
      c.roles = AdverbialClause{*adv, std::move(*adv_arg)};
    } else if (adv_arg) {
      throw Error("TYPE-MISMATCH", "argument given without adv-type", path);
    }
    if (has_prop) c.property = std::move(prop);
    return c;
  }

 private:
  void warn(const std::string& path, const std::string& k) {
    if (warnings_) warnings_->push_back("unrecognized attribute '" + k + "' at " + path);
  }

  static std::string key(const SExpr& pair) { return normalize(pair.items.front().text); }

  static bool is_pair(const SExpr& n) {
    return n.is_list() && !n.items.empty() && n.items.front().kind == SExpr::Kind::atom;
  }

  static std::vector<const SExpr*> frame_pairs(const SExpr& node, const std::string& path) {
    if (!node.is_list()) throw Error("NON-PAIR", "expected an attribute list, found '" + node.text + "'", path);
    std::vector<const SExpr*> out;
    for (const auto& item : node.items) {
      if (!is_pair(item))
        throw Error("NON-PAIR",
                    "list element on line " + std::to_string(item.line) + " is not an (attribute value) pair", path);
      out.push_back(&item);
    }
    return out;
  }

  // The value of a pair that should be an attribute list. Several pair-valued
  // items after the key are accepted as one list.
  const SExpr& frame_value(const SExpr& pair, const std::string& path) {
    if (pair.items.size() == 2 && pair.items[1].is_list()) return pair.items[1];
    if (pair.items.size() > 2) {
      bool all_pairs = std::all_of(pair.items.begin() + 1, pair.items.end(), is_pair);
      if (all_pairs) {
        synthesized_.push_back(SExpr::list({pair.items.begin() + 1, pair.items.end()}));
        return synthesized_.back();
      }
    }
    throw Error("TYPE-MISMATCH", "attribute '" + key(pair) + "' needs a list value", path);
  }

  static std::string scalar(const SExpr& pair, const std::string& path) {
    if (pair.items.size() == 2 && pair.items[1].is_scalar()) return pair.items[1].text;
    throw Error("TYPE-MISMATCH", "attribute '" + key(pair) + "' needs a single scalar value", path);
  }

  static bool boolean(const SExpr& pair, const std::string& path) {
    std::string v = normalize(scalar(pair, path));
    if (v == "+" || v == "t" || v == "true" || v == "yes") return true;
    if (v == "-" || v == "nil" || v == "false" || v == "no") return false;
    throw Error("TYPE-MISMATCH", "'" + v + "' is not a boolean (+/-)", path);
  }

  static int integer(const SExpr& pair, const std::string& path) {
    std::string v = scalar(pair, path);
    try {
      std::size_t used = 0;
      int n = std::stoi(v, &used);
      if (used == v.size()) return n;
    } catch (const std::exception&) {
    }
    throw Error("TYPE-MISMATCH", "'" + v + "' is not an integer", path);
  }

  template <class E, std::size_t N>
  static E enum_value(const NameTable<E, N>& table, const SExpr& pair, const std::string& path) {
    std::string v = normalize(scalar(pair, path));
    if (auto e = value_of(table, v)) return *e;
    throw Error("TYPE-MISMATCH", "unexpected value '" + v + "' for " + key(pair), path);
  }

  static Label label(std::string_view text, const std::string& path) {
    if (auto l = parse_label(normalize(text))) return *l;
    throw Error("TYPE-MISMATCH", "unknown constituent label '" + std::string(text) + "'", path);
  }

  // Items of a list-valued attribute: a single attribute list, an explicit
  // (*multiple* a b ...), or a plain list of attribute lists.
  std::vector<const SExpr*> items(const SExpr& pair, const std::string& path) {
    std::vector<const SExpr*> out;
    if (pair.items.size() == 2 && pair.items[1].is_list()) {
      const SExpr& v = pair.items[1];
      if (!v.items.empty() && v.items.front().kind == SExpr::Kind::atom && normalize(v.items.front().text) == "*multiple*") {
        for (std::size_t i = 1; i < v.items.size(); ++i) out.push_back(&v.items[i]);
        return out;
      }
      bool list_of_frames = !v.items.empty() && std::all_of(v.items.begin(), v.items.end(), [](const SExpr& n) {
        return n.is_list() && !n.items.empty() && n.items.front().is_list();
      });
      if (list_of_frames) {
        for (const auto& n : v.items) out.push_back(&n);
        return out;
      }
      out.push_back(&v);
      return out;
    }
    out.push_back(&frame_value(pair, path));
    return out;
  }

  std::vector<CName> c_names(const SExpr& pair, const std::string& path) {
    std::vector<CName> out;
    auto xs = items(pair, path);
    for (std::size_t i = 0; i < xs.size(); ++i)
      out.push_back(c_name(*xs[i], xs.size() == 1 ? path : path + "/" + std::to_string(i)));
    return out;
  }

  VerbSpec verb(const SExpr& node, const std::string& path) {
    VerbSpec v;
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "root") v.root = trim_copy(scalar(*p, sub));
      else if (k == "sense" || k == "polarity") {
        std::string s = normalize(scalar(*p, sub));
        if (s == "positive" || s == "pos") v.negative = false;
        else if (s == "negative" || s == "neg") v.negative = true;
        else throw Error("TYPE-MISMATCH", "sense must be positive or negative", sub);
      } else if (k == "tense") v.tense = enum_value(kTenses, *p, sub);
      else if (k == "aspect") v.aspect = enum_value(kAspects, *p, sub);
      else if (k == "modality") {
        std::string s = normalize(scalar(*p, sub));
        if (s == "potentiality" || s == "yabil" || s == "potential" || s == "ability") v.potential = true;
        else if (s == "none" || s == "nil") v.potential = false;
        else throw Error("TYPE-MISMATCH", "unknown modality '" + s + "'", sub);
      } else warn(sub, k);
    }
    return v;
  }

  void labelled(const SExpr& node, const std::string& path, std::map<Label, CName>& out) {
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string sub = path + "/" + key(*p);
      Label l = label(p->items.front().text, sub);
      if (out.count(l)) throw Error("TYPE-MISMATCH", "constituent given twice", sub);
      out.emplace(l, c_name(frame_value(*p, sub), sub));
    }
  }

  void control(const SExpr& node, const std::string& path, CaseFrame& cf) {
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "is") {
        InformationStructure is;
        for (const SExpr* q : frame_pairs(frame_value(*p, sub), sub)) {
          const std::string kk = key(*q);
          const std::string sub2 = sub + "/" + kk;
          if (kk == "topic") is.topic = label(scalar(*q, sub2), sub2);
          else if (kk == "focus") is.focus = label(scalar(*q, sub2), sub2);
          else if (kk == "background" || kk == "backgr") is.background = label(scalar(*q, sub2), sub2);
          else warn(sub2, kk);
        }
        cf.is = is;
      } else if (k == "es") {
        EmphasisSites es;
        for (const SExpr* q : frame_pairs(frame_value(*p, sub), sub)) {
          const std::string kk = key(*q);
          const std::string sub2 = sub + "/" + kk;
          if (kk == "even") es.even = label(scalar(*q, sub2), sub2);
          else if (kk == "too") es.too = label(scalar(*q, sub2), sub2);
          else if (kk == "ques") es.ques = label(scalar(*q, sub2), sub2);
          else warn(sub2, kk);
        }
        cf.es = es;
      } else {
        warn(sub, k);
      }
    }
  }

  Question question(const SExpr& node, const std::string& path) {
    Question q;
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "type") {
        std::string v = normalize(scalar(*p, sub));
        if (v == "yes-no") q.type = Question::Type::yes_no;
        else if (v == "wh") q.type = Question::Type::wh;
        else throw Error("TYPE-MISMATCH", "question type must be yes-no or wh", sub);
      } else if (k == "const") {
        for (std::size_t i = 1; i < p->items.size(); ++i) {
          const SExpr& v = p->items[i];
          if (v.is_scalar()) q.constituents.push_back(label(v.text, sub));
          else
            for (const auto& x : v.items) {
              if (!x.is_scalar()) throw Error("TYPE-MISMATCH", "const expects labels", sub);
              q.constituents.push_back(label(x.text, sub));
            }
        }
      } else {
        warn(sub, k);
      }
    }
    return q;
  }

  Agreement agreement(const SExpr& node, const std::string& path) {
    Agreement a;
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "number") {
        std::string v = normalize(scalar(*p, sub));
        if (v == "singular" || v == "sg") a.number = Number::singular;
        else if (v == "plural" || v == "pl") a.number = Number::plural;
        else throw Error("TYPE-MISMATCH", "agr number must be singular or plural, got '" + v + "'", sub);
      } else if (k == "person") {
        a.person = integer(*p, sub);
        if (a.person < 1 || a.person > 3) throw Error("TYPE-MISMATCH", "agr person must be 1, 2 or 3", sub);
      } else {
        warn(sub, k);
      }
    }
    return a;
  }

  SemOverride sem(const SExpr& node, const std::string& path) {
    SemOverride s;
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "temporal") s.temporal = boolean(*p, sub);
      else if (k == "container") s.container = boolean(*p, sub);
      else if (k == "measure") s.measure = boolean(*p, sub);
      else if (k == "countable") s.countable = boolean(*p, sub);
      else if (k == "material") s.material = boolean(*p, sub);
      else warn(sub, k);
    }
    return s;
  }

  static void merge_sem(SemOverride& into, const SemOverride& from) {
    if (from.temporal) into.temporal = from.temporal;
    if (from.container) into.container = from.container;
    if (from.measure) into.measure = from.measure;
    if (from.countable) into.countable = from.countable;
    if (from.material) into.material = from.material;
  }

  void referent(const SExpr& node, const std::string& path, CName& c) {
    Referent r;
    SemOverride pending_sem;
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "arg") {
        const SExpr& v = frame_value(*p, sub);
        bool is_bcon = false;
        if (!v.items.empty() && is_pair(v.items.front()))
          for (const auto& item : v.items)
            if (is_pair(item) && normalize(item.items.front().text) == "concept") is_bcon = true;
        if (is_bcon) {
          BCon b;
          for (const SExpr* q : frame_pairs(v, sub)) {
            const std::string kk = key(*q);
            const std::string sub2 = sub + "/" + kk;
            if (kk == "concept") b.name = trim_copy(scalar(*q, sub2));
            else if (kk == "sem") merge_sem(b.sem, sem(frame_value(*q, sub2), sub2));
            else warn(sub2, kk);
          }
          r.bcon = std::move(b);
        } else {
          r.list = c_names(*p, sub);
        }
      } else if (k == "agr") {
        r.agr = agreement(frame_value(*p, sub), sub);
      } else if (k == "poss") {
        r.poss = agreement(frame_value(*p, sub), sub);
      } else if (k == "sem") {
        merge_sem(pending_sem, sem(frame_value(*p, sub), sub));
      } else if (k == "control") {
        for (const SExpr* q : frame_pairs(frame_value(*p, sub), sub)) {
          const std::string kk = key(*q);
          if (kk == "drop") r.drop = boolean(*q, sub + "/drop");
          else warn(sub + "/" + kk, kk);
        }
      } else if (k == "drop") {
        r.drop = boolean(*p, sub);
      } else if (k == "roles") {
        c.roles = roles(frame_value(*p, sub), sub);
      } else if (k == "classifier") {
        c.classifier = c_name(frame_value(*p, sub), sub);
      } else if (k == "modifier") {
        c.modifier = modifier(frame_value(*p, sub), sub);
      } else if (k == "specifier") {
        c.specifier = specifier(frame_value(*p, sub), sub);
      } else if (k == "possessor") {
        c.possessor = possessor(frame_value(*p, sub), sub);
      } else {
        warn(sub, k);
      }
    }
    if (!pending_sem.empty()) {
      if (!r.bcon) throw Error("TYPE-MISMATCH", "sem given for a referent without a concept", path);
      merge_sem(r.bcon->sem, pending_sem);
    }
    c.referent = std::move(r);
  }

  RoleSpec roles(const SExpr& node, const std::string& path) {
    std::optional<std::string> role;
    std::optional<ActType> type;
    std::optional<AdvType> adv;
    std::optional<CaseFrame> arg;
    bool is_suffix = false;
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "role") role = normalize(scalar(*p, sub));
      else if (k == "type") {
        type = value_of(kActTypes, normalize(scalar(*p, sub)));
        if (!type) throw Error("TYPE-MISMATCH", "unknown clause type '" + scalar(*p, sub) + "'", sub);
      } else if (k == "adv-type") {
        adv = value_of(kAdvTypes, normalize(scalar(*p, sub)));
        if (!adv) throw Error("TYPE-MISMATCH", "unknown adverbial type '" + scalar(*p, sub) + "'", sub);
      } else if (k == "arg" || k == "argument") {
        arg = case_frame(frame_value(*p, sub), sub);
      } else if (k == "act-suffix") {
        std::string v = normalize(scalar(*p, sub));
        if (v == "is") is_suffix = true;
        else if (v == "ma") is_suffix = false;
        else throw Error("TYPE-MISMATCH", "act-suffix must be ma or is", sub);
      } else {
        warn(sub, k);
      }
    }
    if (!arg) throw Error("TYPE-MISMATCH", "roles without an embedded clause", path);
    if (adv) return AdverbialClause{*adv, std::move(*arg)};
    if (type) return FullClause{*type, is_suffix, std::move(*arg)};
    if (!role) throw Error("TYPE-MISMATCH", "roles without a role", path);
    if (*role == "fact") return FullClause{ActType::fact, is_suffix, std::move(*arg)};
    if (*role == "act") {
      ActType t = arg->s_form == SForm::inf_def_act ? ActType::def_act : ActType::ind_act;
      return FullClause{t, is_suffix, std::move(*arg)};
    }
    if (*role == "experiencer") return GappedModifier{GapRole::agent, std::move(*arg)};
    if (auto g = value_of(kGapRoles, *role)) return GappedModifier{*g, std::move(*arg)};
    throw Error("TYPE-MISMATCH", "unknown role '" + *role + "'", path);
  }

  NumberQuantity number_quantity(const SExpr& node, const std::string& path) {
    NumberQuantity n;
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "low") n.low = integer(*p, sub);
      else if (k == "high") n.high = integer(*p, sub);
      else if (k == "control") {
        for (const SExpr* q : frame_pairs(frame_value(*p, sub), sub)) {
          const std::string kk = key(*q);
          const std::string sub2 = sub + "/" + kk;
          if (kk == "formal-card") n.formal_card = boolean(*q, sub2);
          else if (kk == "formal-low") n.formal_low = boolean(*q, sub2);
          else if (kk == "formal-high") n.formal_high = boolean(*q, sub2);
          else warn(sub2, kk);
        }
      } else warn(sub, k);
    }
    return n;
  }

  template <class T>
  T unit_quantity(const SExpr& node, const std::string& path, bool container) {
    T q;
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "quantity" || k == "number") q.quantity = number_quantity(frame_value(*p, sub), sub);
      else if (k == "unit") q.unit = c_name(frame_value(*p, sub), sub);
      else if (!container && k == "approx") {
        if constexpr (std::is_same_v<T, MeasureQuantity>) q.approx = boolean(*p, sub);
      } else if (container && k == "dolusu") {
        if constexpr (std::is_same_v<T, ContainerFull>) q.dolusu = boolean(*p, sub);
      } else warn(sub, k);
    }
    if (!q.unit) throw Error("TYPE-MISMATCH", "quantity without a unit", path);
    return q;
  }

  Quantity quantity(const SExpr& node, const std::string& path) {
    auto pairs = frame_pairs(node, path);
    for (const SExpr* p : pairs) {
      const std::string k = key(*p);
      if (k == "low") return number_quantity(node, path);
    }
    if (pairs.size() != 1) throw Error("TYPE-MISMATCH", "quantity must be one of number/measure/container-full/fuzzy-quantity", path);
    const SExpr& p = *pairs.front();
    const std::string k = key(p);
    const std::string sub = path + "/" + k;
    if (k == "number") return number_quantity(frame_value(p, sub), sub);
    if (k == "measure") return unit_quantity<MeasureQuantity>(frame_value(p, sub), sub, false);
    if (k == "container-full") return unit_quantity<ContainerFull>(frame_value(p, sub), sub, true);
    if (k == "fuzzy-quantity") {
      FuzzyQuantity f;
      for (const SExpr* q : frame_pairs(frame_value(p, sub), sub)) {
        const std::string kk = key(*q);
        const std::string sub2 = sub + "/" + kk;
        if (kk == "f-quan") f.f_quan = trim_copy(scalar(*q, sub2));
        else if (kk == "control") {
          for (const SExpr* r : frame_pairs(frame_value(*q, sub2), sub2)) {
            if (key(*r) == "formal-quantity") f.formal_quantity = boolean(*r, sub2 + "/formal-quantity");
            else warn(sub2 + "/" + key(*r), key(*r));
          }
        } else warn(sub2, kk);
      }
      return f;
    }
    throw Error("TYPE-MISMATCH", "unknown quantity kind '" + k + "'", sub);
  }

  std::variant<Degree, PComparative> intensifier(const SExpr& node, const std::string& path) {
    std::optional<std::string> degree, comparator;
    std::optional<CName> arg;
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "degree") degree = trim_copy(scalar(*p, sub));
      else if (k == "comparator") comparator = normalize(scalar(*p, sub));
      else if (k == "arg") arg = c_name(frame_value(*p, sub), sub);
      else warn(sub, k);
    }
    if (degree) return Degree{*degree};
    if (comparator && arg) return PComparative{*comparator, std::move(*arg)};
    throw Error("TYPE-MISMATCH", "intensifier needs a degree or a comparator with an argument", path);
  }

  SProp s_prop(const SExpr& node, const std::string& path) {
    SProp s;
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "p-name") s.p_name = trim_copy(scalar(*p, sub));
      else if (k == "intensifier") s.intensifier = intensifier(frame_value(*p, sub), sub);
      else warn(sub, k);
    }
    return s;
  }

  ModifierBlock modifier(const SExpr& node, const std::string& path) {
    ModifierBlock m;
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "mod-rel") {
        auto xs = items(*p, sub);
        for (std::size_t i = 0; i < xs.size(); ++i) {
          const std::string sub2 = xs.size() == 1 ? sub : sub + "/" + std::to_string(i);
          ModRel r;
          for (const SExpr* q : frame_pairs(*xs[i], sub2)) {
            const std::string kk = key(*q);
            const std::string sub3 = sub2 + "/" + kk;
            if (kk == "relation") r.relation = normalize(scalar(*q, sub3));
            else if (kk == "argument") {
              const SExpr& v = frame_value(*q, sub3);
              bool is_measure = false;
              for (const auto& item : v.items)
                if (is_pair(item) && (normalize(item.items.front().text) == "unit")) is_measure = true;
              if (is_measure) r.measure = unit_quantity<MeasureQuantity>(v, sub3, false);
              else r.argument = c_names(*q, sub3);
            } else warn(sub3, kk);
          }
          m.mod_rel.push_back(std::move(r));
        }
      } else if (k == "ordinal") {
        Ordinal o;
        for (const SExpr* q : frame_pairs(frame_value(*p, sub), sub)) {
          const std::string kk = key(*q);
          const std::string sub2 = sub + "/" + kk;
          if (kk == "order") {
            std::string v = scalar(*q, sub2);
            if (!v.empty() && std::all_of(v.begin(), v.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
              o.number = integer(*q, sub2);
            else
              o.word = normalize(v);
          } else if (kk == "intensifier") {
            o.intensifier = boolean(*q, sub2);
          } else warn(sub2, kk);
        }
        m.ordinal = o;
      } else if (k == "quan-mod") {
        m.quan_mod = quantity(frame_value(*p, sub), sub);
      } else if (k == "qualitative") {
        auto xs = items(*p, sub);
        for (std::size_t i = 0; i < xs.size(); ++i)
          m.qualitative.push_back(s_prop(*xs[i], xs.size() == 1 ? sub : sub + "/" + std::to_string(i)));
      } else if (k == "control") {
        for (const SExpr* q : frame_pairs(frame_value(*p, sub), sub)) {
          const std::string kk = key(*q);
          const std::string sub2 = sub + "/" + kk;
          if (kk == "emphasis") {
            std::string v = normalize(scalar(*q, sub2));
            if (v == "quantitative") m.emphasis = Emphasis::quantitative;
            else if (v == "qualitative") m.emphasis = Emphasis::qualitative;
            else throw Error("TYPE-MISMATCH", "emphasis must be quantitative or qualitative", sub2);
          } else warn(sub2, kk);
        }
      } else warn(sub, k);
    }
    return m;
  }

  std::string quantifier_root(const SExpr& pair, const std::string& path) {
    if (pair.items.size() == 2 && pair.items[1].is_scalar()) return trim_copy(pair.items[1].text);
    for (const SExpr* q : frame_pairs(frame_value(pair, path), path)) {
      if (key(*q) == "root") return trim_copy(scalar(*q, path + "/root"));
      warn(path + "/" + key(*q), key(*q));
    }
    throw Error("TYPE-MISMATCH", "quantifier without a root", path);
  }

  SpecifierBlock specifier(const SExpr& node, const std::string& path) {
    SpecifierBlock s;
    for (const SExpr* p : frame_pairs(node, path)) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "set-spec") s.set_spec = c_names(*p, sub);
      else if (k == "spec-rel") {
        SpecRel r;
        for (const SExpr* q : frame_pairs(frame_value(*p, sub), sub)) {
          const std::string kk = key(*q);
          const std::string sub2 = sub + "/" + kk;
          if (kk == "relation") r.relation = normalize(scalar(*q, sub2));
          else if (kk == "argument") r.argument = c_names(*q, sub2);
          else warn(sub2, kk);
        }
        s.spec_rel = std::move(r);
      } else if (k == "dem") {
        for (const SExpr* d : items(*p, sub)) {
          for (const SExpr* q : frame_pairs(*d, sub)) {
            if (key(*q) == "demons") s.dem.push_back(trim_copy(scalar(*q, sub + "/demons")));
            else warn(sub + "/" + key(*q), key(*q));
          }
        }
      } else if (k == "quan") {
        Quan q;
        for (const SExpr* x : frame_pairs(frame_value(*p, sub), sub)) {
          const std::string kk = key(*x);
          const std::string sub2 = sub + "/" + kk;
          if (kk == "quantifier") q.quantifier = quantifier_root(*x, sub2);
          else if (kk == "definite") q.definite = boolean(*x, sub2);
          else if (kk == "referential") q.referential = boolean(*x, sub2);
          else if (kk == "specific") q.specific = boolean(*x, sub2);
          else warn(sub2, kk);
        }
        s.quan = q;
      } else if (k == "control") {
        for (const SExpr* q : frame_pairs(frame_value(*p, sub), sub)) {
          const std::string kk = key(*q);
          const std::string sub2 = sub + "/" + kk;
          if (kk == "dem-order") {
            std::string v = normalize(scalar(*q, sub2));
            if (v == "dem-before-quant") s.dem_order = DemOrder::dem_before_quant;
            else if (v == "quant-before-dem") s.dem_order = DemOrder::quant_before_dem;
            else throw Error("TYPE-MISMATCH", "dem-order must be dem-before-quant or quant-before-dem", sub2);
          } else warn(sub2, kk);
        }
      } else warn(sub, k);
    }
    return s;
  }

  Possessor possessor(const SExpr& node, const std::string& path) {
    Possessor p;
    bool structured = false;
    for (const SExpr* x : frame_pairs(node, path)) {
      const std::string k = key(*x);
      if (k == "argument" || k == "control") structured = true;
    }
    if (!structured) {
      p.argument.push_back(c_name(node, path));
      return p;
    }
    for (const SExpr* x : frame_pairs(node, path)) {
      const std::string k = key(*x);
      const std::string sub = path + "/" + k;
      if (k == "argument") p.argument = c_names(*x, sub);
      else if (k == "control") {
        for (const SExpr* q : frame_pairs(frame_value(*x, sub), sub)) {
          const std::string kk = key(*q);
          const std::string sub2 = sub + "/" + kk;
          if (kk == "drop") p.drop = boolean(*q, sub2);
          else if (kk == "move") p.move = boolean(*q, sub2);
          else warn(sub2, kk);
        }
      } else warn(sub, k);
    }
    return p;
  }

  Conjoined conjoined(const std::vector<const SExpr*>& pairs, const std::string& path) {
    Conjoined c;
    for (const SExpr* p : pairs) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "type") continue;
      if (k == "conj") c.conj = normalize(scalar(*p, sub));
      else if (k == "elements") {
        auto xs = items(*p, sub);
        for (std::size_t i = 0; i < xs.size(); ++i) c.elements.push_back(sentence(*xs[i], sub + "/" + std::to_string(i)));
      } else warn(sub, k);
    }
    return c;
  }

  Linked linked(const std::vector<const SExpr*>& pairs, const std::string& path) {
    Linked l;
    for (const SExpr* p : pairs) {
      const std::string k = key(*p);
      const std::string sub = path + "/" + k;
      if (k == "type") continue;
      if (k == "link-relation" || k == "relation") l.relation = normalize(scalar(*p, sub));
      else if (k == "arg1") l.arg1 = sentence(frame_value(*p, sub), sub);
      else if (k == "arg2") l.arg2 = sentence(frame_value(*p, sub), sub);
      else warn(sub, k);
    }
    if (!l.arg1 || !l.arg2) throw Error("TYPE-MISMATCH", "linked sentence needs arg1 and arg2", path);
    return l;
  }

  std::vector<std::string>* warnings_;
  std::deque<SExpr> synthesized_;
};

// ---------------------------------------------------------------------------
// Writing

SExpr pair(std::string k, SExpr v) { return SExpr::list({SExpr::atom(std::move(k)), std::move(v)}); }
SExpr pair(std::string k, std::string atom) { return pair(std::move(k), SExpr::atom(std::move(atom))); }
SExpr str_pair(std::string k, std::string s) { return pair(std::move(k), SExpr::str(std::move(s))); }
SExpr bool_pair(std::string k, bool b) { return pair(std::move(k), std::string(b ? "+" : "-")); }

SExpr write_case_frame(const CaseFrame& cf);
SExpr write_c_name(const CName& c);

template <class T, class F>
SExpr many(const std::vector<T>& xs, F&& write_one) {
  if (xs.size() == 1) return write_one(xs.front());
  SExpr out = SExpr::list({SExpr::atom("*multiple*")});
  for (const auto& x : xs) out.items.push_back(write_one(x));
  return out;
}

SExpr write_agr(const Agreement& a) {
  return SExpr::list({pair("number", std::string(a.number == Number::singular ? "singular" : "plural")),
                      pair("person", std::to_string(a.person))});
}

SExpr write_sem(const SemOverride& s) {
  SExpr out = SExpr::list();
  if (s.temporal) out.items.push_back(bool_pair("temporal", *s.temporal));
  if (s.container) out.items.push_back(bool_pair("container", *s.container));
  if (s.measure) out.items.push_back(bool_pair("measure", *s.measure));
  if (s.countable) out.items.push_back(bool_pair("countable", *s.countable));
  if (s.material) out.items.push_back(bool_pair("material", *s.material));
  return out;
}

SExpr write_cnames(const std::vector<CName>& xs) { return many(xs, write_c_name); }

SExpr write_number(const NumberQuantity& n) {
  SExpr out = SExpr::list({pair("low", std::to_string(n.low))});
  if (n.high) out.items.push_back(pair("high", std::to_string(*n.high)));
  SExpr ctl = SExpr::list();
  if (n.formal_card) ctl.items.push_back(bool_pair("formal-card", true));
  if (n.formal_low) ctl.items.push_back(bool_pair("formal-low", true));
  if (n.formal_high) ctl.items.push_back(bool_pair("formal-high", true));
  if (!ctl.items.empty()) out.items.push_back(pair("control", std::move(ctl)));
  return out;
}

SExpr write_measure(const MeasureQuantity& m) {
  return SExpr::list({pair("quantity", write_number(m.quantity)), pair("unit", write_c_name(*m.unit)),
                      bool_pair("approx", m.approx)});
}

SExpr write_quantity(const Quantity& q) {
  return std::visit(
      [](const auto& v) -> SExpr {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NumberQuantity>) {
          return SExpr::list({pair("number", write_number(v))});
        } else if constexpr (std::is_same_v<T, MeasureQuantity>) {
          return SExpr::list({pair("measure", write_measure(v))});
        } else if constexpr (std::is_same_v<T, ContainerFull>) {
          return SExpr::list({pair("container-full",
                                   SExpr::list({pair("quantity", write_number(v.quantity)),
                                                pair("unit", write_c_name(*v.unit)), bool_pair("dolusu", v.dolusu)}))});
        } else {
          SExpr f = SExpr::list({str_pair("f-quan", v.f_quan)});
          if (v.formal_quantity)
            f.items.push_back(pair("control", SExpr::list({bool_pair("formal-quantity", true)})));
          return SExpr::list({pair("fuzzy-quantity", std::move(f))});
        }
      },
      q);
}

SExpr write_sprop(const SProp& s) {
  SExpr out = SExpr::list({str_pair("p-name", s.p_name)});
  if (s.intensifier) {
    if (const auto* d = std::get_if<Degree>(&*s.intensifier)) {
      out.items.push_back(pair("intensifier", SExpr::list({str_pair("degree", d->degree)})));
    } else {
      const auto& c = std::get<PComparative>(*s.intensifier);
      out.items.push_back(
          pair("intensifier", SExpr::list({pair("comparator", c.comparator), pair("arg", write_c_name(*c.arg))})));
    }
  }
  return out;
}

SExpr write_roles_items(const RoleSpec& r, SExpr& out) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GappedModifier>) {
          out.items.push_back(pair("role", std::string(to_string(v.role))));
          out.items.push_back(pair("arg", write_case_frame(*v.arg)));
        } else if constexpr (std::is_same_v<T, FullClause>) {
          out.items.push_back(pair("type", std::string(to_string(v.type))));
          if (v.is_suffix) out.items.push_back(pair("act-suffix", std::string("is")));
          out.items.push_back(pair("arg", write_case_frame(*v.arg)));
        } else {
          out.items.push_back(pair("adv-type", std::string(to_string(v.adv_type))));
          out.items.push_back(pair("argument", write_case_frame(*v.argument)));
        }
      },
      r);
  return out;
}

SExpr write_c_name(const CName& c) {
  SExpr out = SExpr::list();
  if (c.referent) {
    const Referent& r = *c.referent;
    SExpr ref = SExpr::list();
    if (r.bcon) {
      SExpr arg = SExpr::list({str_pair("concept", r.bcon->name)});
      if (!r.bcon->sem.empty()) arg.items.push_back(pair("sem", write_sem(r.bcon->sem)));
      ref.items.push_back(pair("arg", std::move(arg)));
    } else if (!r.list.empty()) {
      ref.items.push_back(pair("arg", write_cnames(r.list)));
    }
    if (r.agr) ref.items.push_back(pair("agr", write_agr(*r.agr)));
    if (r.poss) ref.items.push_back(pair("poss", write_agr(*r.poss)));
    if (r.drop) ref.items.push_back(pair("control", SExpr::list({bool_pair("drop", true)})));
    out.items.push_back(pair("referent", std::move(ref)));
  }
  if (c.classifier) out.items.push_back(pair("classifier", write_c_name(*c.classifier)));
  if (c.roles) {
    if (std::holds_alternative<AdverbialClause>(*c.roles)) {
      write_roles_items(*c.roles, out);
    } else {
      SExpr roles = SExpr::list();
      write_roles_items(*c.roles, roles);
      out.items.push_back(pair("roles", std::move(roles)));
    }
  }
  if (c.modifier) {
    const ModifierBlock& m = *c.modifier;
    SExpr mod = SExpr::list();
    if (!m.mod_rel.empty()) {
      mod.items.push_back(pair("mod-rel", many(m.mod_rel, [](const ModRel& r) {
                                 SExpr x = SExpr::list({pair("relation", r.relation)});
                                 if (r.measure) x.items.push_back(pair("argument", write_measure(*r.measure)));
                                 else x.items.push_back(pair("argument", write_cnames(r.argument)));
                                 return x;
                               })));
    }
    if (m.ordinal) {
      SExpr o = SExpr::list(
          {pair("order", m.ordinal->number > 0 ? std::to_string(m.ordinal->number) : m.ordinal->word)});
      if (m.ordinal->intensifier) o.items.push_back(bool_pair("intensifier", true));
      mod.items.push_back(pair("ordinal", std::move(o)));
    }
    if (m.quan_mod) mod.items.push_back(pair("quan-mod", write_quantity(*m.quan_mod)));
    if (!m.qualitative.empty()) mod.items.push_back(pair("qualitative", many(m.qualitative, write_sprop)));
    if (m.emphasis)
      mod.items.push_back(pair(
          "control", SExpr::list({pair("emphasis", std::string(*m.emphasis == Emphasis::quantitative ? "quantitative"
                                                                                                      : "qualitative"))})));
    out.items.push_back(pair("modifier", std::move(mod)));
  }
  if (c.specifier) {
    const SpecifierBlock& s = *c.specifier;
    SExpr spec = SExpr::list();
    if (!s.set_spec.empty()) spec.items.push_back(pair("set-spec", write_cnames(s.set_spec)));
    if (s.spec_rel)
      spec.items.push_back(pair("spec-rel", SExpr::list({pair("relation", s.spec_rel->relation),
                                                         pair("argument", write_cnames(s.spec_rel->argument))})));
    if (!s.dem.empty())
      spec.items.push_back(pair("dem", many(s.dem, [](const std::string& d) {
                                  return SExpr::list({pair("demons", d)});
                                })));
    if (s.quan) {
      SExpr q = SExpr::list();
      if (s.quan->quantifier) q.items.push_back(pair("quantifier", *s.quan->quantifier));
      if (s.quan->definite) q.items.push_back(bool_pair("definite", *s.quan->definite));
      if (s.quan->referential) q.items.push_back(bool_pair("referential", *s.quan->referential));
      if (s.quan->specific) q.items.push_back(bool_pair("specific", *s.quan->specific));
      spec.items.push_back(pair("quan", std::move(q)));
    }
    if (s.dem_order)
      spec.items.push_back(pair(
          "control", SExpr::list({pair("dem-order", std::string(*s.dem_order == DemOrder::dem_before_quant
                                                                    ? "dem-before-quant"
                                                                    : "quant-before-dem"))})));
    out.items.push_back(pair("specifier", std::move(spec)));
  }
  if (c.possessor) {
    SExpr p = SExpr::list({pair("argument", write_cnames(c.possessor->argument))});
    SExpr ctl = SExpr::list();
    if (c.possessor->drop) ctl.items.push_back(bool_pair("drop", true));
    if (c.possessor->move) ctl.items.push_back(bool_pair("move", true));
    if (!ctl.items.empty()) p.items.push_back(pair("control", std::move(ctl)));
    out.items.push_back(pair("possessor", std::move(p)));
  }
  if (c.conj_list) {
    out.items.push_back(pair("conj", c.conj_list->conj));
    SExpr el = SExpr::list({SExpr::atom("*multiple*")});
    for (const auto& e : c.conj_list->elements) el.items.push_back(write_c_name(e));
    out.items.push_back(pair("elements", std::move(el)));
  }
  if (c.property) {
    SExpr p = write_sprop(*c.property);
    for (auto& item : p.items) out.items.push_back(std::move(item));
  }
  if (c.determiner) out.items.push_back(pair("quantifier", SExpr::list({pair("root", *c.determiner)})));
  return out;
}

SExpr write_case_frame(const CaseFrame& cf) {
  SExpr out = SExpr::list({pair("s-form", std::string(to_string(cf.s_form))),
                           pair("clause-type", std::string(to_string(cf.clause_type)))});
  if (!cf.rel.empty()) out.items.push_back(pair("rel", cf.rel));
  out.items.push_back(pair("voice", std::string(to_string(cf.voice))));
  out.items.push_back(pair("speech-act", std::string(to_string(cf.speech_act))));
  if (cf.ques) {
    SExpr q = SExpr::list({pair("type", std::string(cf.ques->type == Question::Type::yes_no ? "yes-no" : "wh"))});
    if (!cf.ques->constituents.empty()) {
      SExpr labels = SExpr::list();
      for (Label l : cf.ques->constituents) labels.items.push_back(SExpr::atom(std::string(to_string(l))));
      q.items.push_back(pair("const", std::move(labels)));
    }
    out.items.push_back(pair("ques", std::move(q)));
  }
  if (cf.verb) {
    const VerbSpec& v = *cf.verb;
    SExpr verb = SExpr::list({str_pair("root", v.root), pair("sense", std::string(v.negative ? "negative" : "positive"))});
    if (v.potential) verb.items.push_back(pair("modality", std::string("potentiality")));
    if (v.tense) verb.items.push_back(pair("tense", std::string(to_string(*v.tense))));
    if (v.aspect) verb.items.push_back(pair("aspect", std::string(to_string(*v.aspect))));
    out.items.push_back(pair("verb", std::move(verb)));
  }
  auto labelled = [](const std::map<Label, CName>& m) {
    SExpr x = SExpr::list();
    for (const auto& [l, c] : m) x.items.push_back(pair(std::string(to_string(l)), write_c_name(c)));
    return x;
  };
  if (!cf.arguments.empty()) out.items.push_back(pair("arguments", labelled(cf.arguments)));
  if (!cf.adjuncts.empty()) out.items.push_back(pair("adjuncts", labelled(cf.adjuncts)));
  if (cf.is || cf.es) {
    SExpr ctl = SExpr::list();
    if (cf.is) {
      SExpr is = SExpr::list();
      if (cf.is->topic) is.items.push_back(pair("topic", std::string(to_string(*cf.is->topic))));
      if (cf.is->focus) is.items.push_back(pair("focus", std::string(to_string(*cf.is->focus))));
      if (cf.is->background) is.items.push_back(pair("background", std::string(to_string(*cf.is->background))));
      ctl.items.push_back(pair("is", std::move(is)));
    }
    if (cf.es) {
      SExpr es = SExpr::list();
      if (cf.es->even) es.items.push_back(pair("even", std::string(to_string(*cf.es->even))));
      if (cf.es->too) es.items.push_back(pair("too", std::string(to_string(*cf.es->too))));
      if (cf.es->ques) es.items.push_back(pair("ques", std::string(to_string(*cf.es->ques))));
      ctl.items.push_back(pair("es", std::move(es)));
    }
    out.items.push_back(pair("control", std::move(ctl)));
  }
  return out;
}

SExpr write_sentence(const ComplexSentence& cs) {
  return std::visit(
      [](const auto& v) -> SExpr {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CaseFrame>) {
          return write_case_frame(v);
        } else if constexpr (std::is_same_v<T, Conjoined>) {
          SExpr el = SExpr::list({SExpr::atom("*multiple*")});
          for (const auto& e : v.elements) el.items.push_back(write_sentence(e));
          return SExpr::list({pair("type", std::string("conj")), pair("conj", v.conj), pair("elements", std::move(el))});
        } else {
          return SExpr::list({pair("type", std::string("linked")), pair("link-relation", v.relation),
                              pair("arg1", write_sentence(*v.arg1)), pair("arg2", write_sentence(*v.arg2))});
        }
      },
      cs.node);
}

}  // namespace

// ---------------------------------------------------------------------------

std::string_view to_string(Label l) { return name_of(kLabels, l); }
std::optional<Label> parse_label(std::string_view s) { return value_of(kLabels, normalize(s)); }
std::string_view to_string(GapRole r) { return name_of(kGapRoles, r); }
std::optional<GapRole> parse_gap_role(std::string_view s) { return value_of(kGapRoles, normalize(s)); }
std::string_view to_string(ActType a) { return name_of(kActTypes, a); }
std::string_view to_string(AdvType a) { return name_of(kAdvTypes, a); }
std::optional<AdvType> parse_adv_type(std::string_view s) { return value_of(kAdvTypes, normalize(s)); }
std::string_view to_string(SForm v) { return name_of(kSForms, v); }
std::string_view to_string(ClauseType v) { return name_of(kClauseTypes, v); }
std::string_view to_string(Voice v) { return name_of(kVoices, v); }
std::string_view to_string(SpeechAct v) { return name_of(kSpeechActs, v); }
std::string_view to_string(Tense v) { return name_of(kTenses, v); }
std::string_view to_string(Aspect v) { return name_of(kAspects, v); }

std::string agreement_code(const Agreement& a) {
  return std::to_string(a.person) + (a.number == Number::singular ? "SG" : "PL");
}

SemFeatures SemOverride::apply(SemFeatures base) const {
  if (temporal) base.temporal = *temporal;
  if (container) base.container = *container;
  if (measure) base.measure = *measure;
  if (countable) base.countable = *countable;
  if (material) base.material = *material;
  return base;
}

const CName* CaseFrame::constituent(Label l) const {
  if (auto it = arguments.find(l); it != arguments.end()) return &it->second;
  if (auto it = adjuncts.find(l); it != adjuncts.end()) return &it->second;
  return nullptr;
}

ParseOutcome parse_case_frame_detailed(std::string_view text) {
  SExpr node = read_sexpr(text);
  ParseOutcome out;
  FrameReader reader(&out.warnings);
  out.sentence = reader.sentence(node, "");
  return out;
}

ComplexSentence parse_case_frame(std::string_view text) { return parse_case_frame_detailed(text).sentence; }

CName parse_c_name(std::string_view text, std::vector<std::string>* warnings) {
  SExpr node = read_sexpr(text);
  FrameReader reader(warnings);
  return reader.c_name(node, "");
}

std::string serialize(const ComplexSentence& cs) { return write_sexpr(write_sentence(cs)); }
std::string serialize(const CName& c) { return write_sexpr(write_c_name(c)); }

Agreement referent_agr(const CName& c) {
  if (c.referent && c.referent->agr) return *c.referent->agr;
  return Agreement{};
}

bool is_indefinite(const CName& c) {
  if (c.conj_list && !c.conj_list->elements.empty()) return is_indefinite(c.conj_list->elements.back());
  return c.specifier && c.specifier->quan && c.specifier->quan->definite == false;
}

const CaseFrame& role_clause(const RoleSpec& r) {
  return std::visit(
      [](const auto& v) -> const CaseFrame& {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AdverbialClause>) return *v.argument;
        else return *v.arg;
      },
      r);
}

}  // namespace tactgen
