#include "tactgen/morph.hpp"

#include <array>
#include <sstream>

#include "tactgen/error.hpp"

namespace tactgen {

// ---------------------------------------------------------------------------
// Bundles

std::optional<std::string> MorphBundle::get(std::string_view key) const {
  for (const auto& [k, v] : features)
    if (k == key) return v;
  return std::nullopt;
}

MorphBundle& MorphBundle::add(std::string key, std::string value) {
  features.emplace_back(std::move(key), std::move(value));
  return *this;
}

std::string MorphBundle::format() const {
  if (is_punct()) return "[" + punct + "]";
  std::string out = "[";
  for (const auto& [k, v] : features) {
    out += '[';
    out += k;
    out += '=';
    out += v;
    out += ']';
  }
  out += ']';
  return out;
}

MorphBundle MorphBundle::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return Error("BUNDLE-SYNTAX", why + " in '" + std::string(text) + "'");
  };
  MorphBundle b;
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') throw fail("missing brackets");
  std::string_view inner = text.substr(1, text.size() - 2);
  if (inner.empty()) throw fail("empty bundle");
  if (inner.front() != '[') {
    if (inner.find_first_of("[]=") != std::string_view::npos) throw fail("malformed punctuation");
    b.punct = std::string(inner);
    return b;
  }
  std::size_t pos = 0;
  while (pos < inner.size()) {
    if (inner[pos] != '[') throw fail("expected '['");
    std::size_t close = inner.find(']', pos);
    if (close == std::string_view::npos) throw fail("unterminated feature");
    std::string_view feat = inner.substr(pos + 1, close - pos - 1);
    std::size_t eq = feat.find('=');
    if (eq == std::string_view::npos || eq == 0) throw fail("feature without '='");
    b.features.emplace_back(std::string(feat.substr(0, eq)), std::string(feat.substr(eq + 1)));
    pos = close + 1;
  }
  if (!b.get("CAT") || !b.get("ROOT")) throw fail("bundle needs CAT and ROOT");
  return b;
}

MorphBundle punctuation(std::string_view name) {
  MorphBundle b;
  b.punct = std::string(name);
  return b;
}

// ---------------------------------------------------------------------------
// emit_bundle

namespace {

std::string case_code(Case c) {
  std::string s(to_string(c));
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

std::string poss_code(const std::optional<Agreement>& p) {
  return p ? agreement_code(*p) : "NONE";
}

void add_copula(MorphBundle& b, const Copula& c) {
  b.add("CONV", "VERB=NONE");
  b.add("TAM2", c.past ? "PAST" : "PRES");
  b.add("COPULA", "2");
  b.add("AGR", agreement_code(c.agr));
}

MorphBundle emit_nominal(const NominalTask& t) {
  MorphBundle b;
  b.add("CAT", t.pronoun ? "PRONOUN" : "NOUN");
  b.add("ROOT", t.root);
  b.add("AGR", agreement_code(t.agr));
  b.add("POSS", poss_code(t.poss));
  b.add("CASE", case_code(t.case_));
  if (t.rel) {
    b.add("CONV", "ADJ=REL");
    if (t.ki_agr) b.add("AGR", agreement_code(*t.ki_agr));
    if (t.ki_case) b.add("CASE", case_code(*t.ki_case));
  }
  if (t.derivation) b.add("CONV", "ADJ=" + *t.derivation);
  if (t.copula) add_copula(b, *t.copula);
  return b;
}

MorphBundle emit_verb(const VerbTask& t) {
  MorphBundle b;
  b.add("CAT", "VERB");
  b.add("ROOT", t.root);
  if (t.voice == Voice::passive) b.add("VOICE", "PASS");
  if (t.voice == Voice::causative) b.add("VOICE", "CAUS");
  b.add("SENSE", t.negative ? "NEG" : "POS");
  if (t.ability) b.add("COMP", "YABIL");
  switch (t.form) {
    case VerbForm::finite:
      b.add("TAM1", t.tam1);
      if (t.tam2) b.add("TAM2", *t.tam2);
      b.add("AGR", agreement_code(t.agr));
      break;
    case VerbForm::while_:
      b.add("TAM1", t.tam1.empty() ? "AORIST" : t.tam1);
      b.add("CONV", "ADVERB=KEN");
      break;
    case VerbForm::infinitive:
      b.add("CONV", "NOUN=" + t.conv);
      b.add("TYPE", "INFINITIVE");
      b.add("AGR", "3SG");
      b.add("POSS", poss_code(t.poss));
      b.add("CASE", case_code(t.case_));
      break;
    case VerbForm::fact:
      b.add("CONV", "NOUN=" + t.conv);
      b.add("AGR", "3SG");
      b.add("POSS", poss_code(t.poss));
      b.add("CASE", case_code(t.case_));
      break;
    case VerbForm::participle:
      b.add("CONV", "ADJ=" + t.conv);
      if (t.poss) b.add("POSS", agreement_code(*t.poss));
      break;
    case VerbForm::adverb:
      if (!t.tam1.empty()) b.add("TAM1", t.tam1);
      b.add("CONV", "ADVERB=" + t.conv);
      break;
  }
  if (t.copula) add_copula(b, *t.copula);
  return b;
}

}  // namespace

MorphBundle emit_bundle(const WordTask& task) {
  if (auto* n = std::get_if<NominalTask>(&task)) return emit_nominal(*n);
  if (auto* v = std::get_if<VerbTask>(&task)) return emit_verb(*v);
  const auto& s = std::get<SimpleTask>(task);
  if (s.cat == "PUNCT") return punctuation(s.root);
  MorphBundle b;
  b.add("CAT", s.cat);
  b.add("ROOT", s.root);
  if (s.type) b.add("TYPE", *s.type);
  if (s.copula) add_copula(b, *s.copula);
  return b;
}

// ---------------------------------------------------------------------------
// Suffix table

namespace {

constexpr std::pair<std::string_view, std::string_view> kSuffixes[] = {
    {"AGR=PLURAL", "lAr"},
    {"POSS=1SG", "Hm"},
    {"POSS=2SG", "Hn"},
    {"POSS=3SG", "sH"},
    {"POSS=1PL", "HmHz"},
    {"POSS=2PL", "HnHz"},
    {"POSS=3PL", "lArH"},
    {"CASE=ACC", "yH"},
    {"CASE=DAT", "yA"},
    {"CASE=LOC", "DA"},
    {"CASE=ABL", "DAn"},
    {"CASE=GEN", "nHn"},
    {"CASE=INS", "ylA"},
    {"CASE=ACC/N", "nH"},
    {"CASE=DAT/N", "nA"},
    {"CASE=LOC/N", "nDA"},
    {"CASE=ABL/N", "nDAn"},
    {"CASE=GEN/N", "nHn"},
    {"CASE=INS/N", "ylA"},
    {"CONV=ADJ=REL", "ki"},
    {"CONV=ADJ=LIK", "lHk"},
    {"CONV=ADJ=LI", "lH"},
    {"CONV=ADJ=SIZ", "sHz"},
    {"COPULA=PRES", "DHr"},
    {"COPULA=PAST", "yDH"},
    {"VOICE=PASS", "Hl"},
    {"VOICE=PASS/V", "n"},
    {"VOICE=PASS/L", "Hn"},
    {"VOICE=CAUS", "DHr"},
    {"VOICE=CAUS/T", "t"},
    {"SENSE=NEG", "mA"},
    {"COMP=YABIL", "yAbil"},
    {"COMP=YABIL/NEG", "yA"},
    {"TAM1=PAST", "DH"},
    {"TAM1=NARR", "mHS"},
    {"TAM1=PROG1", "Hyor"},
    {"TAM1=FUT", "yAcAk"},
    {"TAM1=COND", "sA"},
    {"TAM1=NECES", "mAlH"},
    {"TAM1=OPT", "yA"},
    {"TAM1=AORIST/AR", "Ar"},
    {"TAM1=AORIST/HR", "Hr"},
    {"TAM1=AORIST/V", "r"},
    {"TAM1=AORIST/NEG", "z"},
    {"TAM2=PAST", "yDH"},
    {"TAM2=COND", "ysA"},
    {"TAM2=NARR", "ymHS"},
    {"AGR=1SG/K", "m"},
    {"AGR=2SG/K", "n"},
    {"AGR=1PL/K", "k"},
    {"AGR=2PL/K", "nHz"},
    {"AGR=3PL/K", "lAr"},
    {"AGR=1SG/Z", "yHm"},
    {"AGR=2SG/Z", "sHn"},
    {"AGR=1PL/Z", "yHz"},
    {"AGR=2PL/Z", "sHnHz"},
    {"AGR=3PL/Z", "lAr"},
    {"AGR=1SG/NEGAOR", "m"},
    {"AGR=1PL/NEGAOR", "yHz"},
    {"AGR=2PL/IMP", "yHn"},
    {"AGR=3SG/IMP", "sHn"},
    {"AGR=3PL/IMP", "sHnlAr"},
    {"AGR=1SG/OPT", "yHm"},
    {"AGR=2SG/OPT", "sHn"},
    {"AGR=1PL/OPT", "lHm"},
    {"AGR=2PL/OPT", "sHnHz"},
    {"AGR=3PL/OPT", "lAr"},
    {"CONV=NOUN=MAK", "mAk"},
    {"CONV=NOUN=MAK/V", "mA"},
    {"CONV=NOUN=MA", "mA"},
    {"CONV=NOUN=IS", "HS"},
    {"CONV=NOUN=DIK", "DHk"},
    {"CONV=NOUN=YACAK", "yAcAk"},
    {"CONV=ADJ=YAN", "yAn"},
    {"CONV=ADJ=DIK", "DHk"},
    {"CONV=ADJ=YACAK", "yAcAk"},
    {"CONV=ADJ=MIS", "mHS"},
    {"CONV=ADVERB=KEN", "ken"},
    {"CONV=ADVERB=YARAK", "yArAk"},
    {"CONV=ADVERB=YIP", "yHp"},
    {"CONV=ADVERB=MADAN", "mAdAn"},
    {"CONV=ADVERB=YINCA", "yHncA"},
    {"CONV=ADVERB=DIKCA", "DHkCA"},
    {"CONV=ADVERB=CASINA", "CAsHnA"},
    {"CONV=ADVERB=YALI", "yAlH"},
    {"CONV=ADVERB=YA", "yA"},
    {"ORDINAL", "HncH"},
    {"PRONOUN=GEN1", "Hm"},
    {"COPULA=PRES/1SG", "yHm"},
    {"COPULA=PRES/2SG", "sHn"},
    {"COPULA=PRES/1PL", "yHz"},
    {"COPULA=PRES/2PL", "sHnHz"},
    {"COPULA=PRES/3PL", "DHrlAr"},
};

}  // namespace

const SuffixTable& SuffixTable::builtin() {
  static const SuffixTable table = [] {
    SuffixTable t;
    for (const auto& [k, v] : kSuffixes) t.entries_.emplace(std::string(k), std::string(v));
    return t;
  }();
  return table;
}

SuffixTable SuffixTable::parse(std::string_view text) {
  SuffixTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
      throw Error("SUFFIX-SYNTAX", "line " + std::to_string(lineno) + ": expected FEATURE<TAB>metaform");
    if (!t.entries_.emplace(line.substr(0, tab), line.substr(tab + 1)).second)
      throw Error("SUFFIX-SYNTAX", "line " + std::to_string(lineno) + ": duplicate feature");
  }
  return t;
}

const std::string& SuffixTable::at(std::string_view key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) throw Error("UNKNOWN-FEATURE", "no suffix for " + std::string(key));
  return it->second;
}

bool SuffixTable::contains(std::string_view key) const { return entries_.find(key) != entries_.end(); }

// ---------------------------------------------------------------------------
// Morpheme selection

bool is_vowel(char c) {
  switch (c) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
    case 'I': case 'O': case 'U': case 'A': case 'H':
      return true;
    default:
      return false;
  }
}

namespace {

bool ends_in_vowel(std::string_view seg) {
  while (!seg.empty() && seg.back() == '\'') seg.remove_suffix(1);
  return !seg.empty() && is_vowel(seg.back());
}

// Resolves buffer consonants and initial high/low vowel drop against the
// preceding segment.
std::string attach(std::string_view prev, std::string suffix) {
  if (suffix.empty() || suffix == "ki" || suffix == "ken") return suffix;
  bool after_vowel = ends_in_vowel(prev);
  char first = suffix[0];
  if (!after_vowel && (first == 'y' || first == 'n') && suffix.size() > 1) return suffix.substr(1);
  if (!after_vowel && suffix == "sH") return "H";
  if (after_vowel && (first == 'H' || first == 'A') && suffix.rfind("Hyor", 0) != 0 && suffix.size() > 1)
    return suffix.substr(1);
  return suffix;
}

class Chain {
 public:
  explicit Chain(std::string root) { segs_.push_back(std::move(root)); }
  void push(const std::string& key) { push_raw(SuffixTable::builtin().at(key)); }
  void push_raw(const std::string& metaform) {
    std::string s = attach(segs_.back(), metaform);
    if (!s.empty()) segs_.push_back(std::move(s));
  }
  const std::string& last() const { return segs_.back(); }
  std::size_t size() const { return segs_.size(); }
  std::string str() const {
    std::string out = segs_[0];
    for (std::size_t i = 1; i < segs_.size(); ++i) out += "+" + segs_[i];
    return out;
  }

 private:
  std::vector<std::string> segs_;
};

bool plural(std::string_view agr) { return agr.size() == 3 && agr.substr(1) == "PL"; }

void push_case(Chain& c, std::string_view value, bool pronominal) {
  if (value == "NOM") return;
  std::string key = "CASE=" + std::string(value);
  if (pronominal) key += "/N";
  c.push(key);
}

void push_copula(Chain& c, const MorphBundle& b, std::size_t from) {
  std::string tam2 = "PRES";
  std::string agr = "3SG";
  for (std::size_t i = from; i < b.features.size(); ++i) {
    const auto& [k, v] = b.features[i];
    if (k == "TAM2") tam2 = v;
    if (k == "AGR") agr = v;
  }
  if (tam2 == "PAST") {
    c.push("COPULA=PAST");
    if (agr != "3SG") c.push("AGR=" + agr + "/K");
    return;
  }
  if (agr == "3SG") c.push("COPULA=PRES");
  else c.push("COPULA=PRES/" + agr);
}

std::string select_nominal(const MorphBundle& b) {
  const std::string root = *b.get("ROOT");
  bool pronoun = *b.get("CAT") == "PRONOUN";
  std::string stem = root;
  bool demonstrative = pronoun && (root == "o" || root == "bu" || root == "Su");
  bool first_agr = true, first_case = true, after_ki = false;
  bool possessed3 = false;
  std::string agr = "3SG";
  for (const auto& [k, v] : b.features) {
    if (k == "AGR" && first_agr) {
      agr = v;
      first_agr = false;
    }
  }
  if (demonstrative && plural(agr)) {
    stem = root == "o" ? "onlar" : root + "nlar";
    demonstrative = false;
  }
  Chain c(stem);
  bool pron_gen_special = pronoun && (root == "ben" || root == "biz");
  first_agr = true;
  for (std::size_t i = 0; i < b.features.size(); ++i) {
    const auto& [k, v] = b.features[i];
    if (k == "CAT" || k == "ROOT" || k == "TYPE") continue;
    if (k == "AGR") {
      if (first_agr) {
        first_agr = false;
        if (plural(v) && !pronoun) c.push("AGR=PLURAL");
      } else if (after_ki && plural(v)) {
        c.push("AGR=PLURAL");
      }
      continue;
    }
    if (k == "POSS") {
      if (v != "NONE") {
        c.push("POSS=" + v);
        possessed3 = v == "3SG" || v == "3PL";
      }
      continue;
    }
    if (k == "CASE") {
      if (first_case) {
        first_case = false;
        if (pron_gen_special && v == "GEN") {
          c.push("PRONOUN=GEN1");
        } else if (pronoun && (root == "ben" || root == "sen") && v == "DAT") {
          // ben/sen take a suppletive dative stem
          c = Chain(root == "ben" ? "ban" : "san");
          c.push("CASE=DAT");
        } else {
          push_case(c, v, possessed3 || demonstrative);
        }
      } else if (after_ki) {
        push_case(c, v, true);
      }
      continue;
    }
    if (k == "CONV") {
      if (v == "ADJ=REL") {
        c.push("CONV=ADJ=REL");
        after_ki = true;
      } else if (v == "VERB=NONE") {
        push_copula(c, b, i + 1);
        break;
      } else {
        c.push("CONV=" + v);
      }
      continue;
    }
    throw Error("UNKNOWN-FEATURE", "no suffix for " + k + "=" + v);
  }
  return c.str();
}

std::string aorist_key(const std::string& root, const Chain& c, bool derived, bool ability,
                       const Lexicon& lex) {
  if (ability || derived) return "TAM1=AORIST/HR";
  if (ends_in_vowel(c.last())) return "TAM1=AORIST/V";
  auto entry = lex.lookup(root, LexCategory::verb);
  AoristAllomorph a = entry && entry->aorist_allomorph ? *entry->aorist_allomorph : default_aorist(root);
  return a == AoristAllomorph::Ar ? "TAM1=AORIST/AR" : "TAM1=AORIST/HR";
}

std::string select_verb(const MorphBundle& b, const Lexicon& lex) {
  const std::string root = *b.get("ROOT");
  Chain c(root);
  bool derived = false;
  bool negative = b.get("SENSE") == std::optional<std::string>("NEG");
  bool ability = b.get("COMP").has_value();
  std::string tam1, tam2, conv, poss;
  bool neg_aorist_agr_done = false;
  bool possessed3 = false;

  for (std::size_t i = 0; i < b.features.size(); ++i) {
    const auto& [k, v] = b.features[i];
    if (k == "CAT" || k == "ROOT" || k == "TYPE") continue;
    if (k == "VOICE") {
      if (v == "PASS") {
        if (ends_in_vowel(c.last())) c.push("VOICE=PASS/V");
        else if (c.last().back() == 'l') c.push("VOICE=PASS/L");
        else c.push("VOICE=PASS");
      } else if (v == "CAUS") {
        char last = c.last().back();
        if (syllable_count(c.last()) > 1 && (ends_in_vowel(c.last()) || last == 'l' || last == 'r'))
          c.push("VOICE=CAUS/T");
        else
          c.push("VOICE=CAUS");
      } else {
        throw Error("UNKNOWN-FEATURE", "no suffix for VOICE=" + v);
      }
      derived = true;
      continue;
    }
    if (k == "SENSE") {
      if (v != "POS" && v != "NEG") throw Error("UNKNOWN-FEATURE", "no suffix for SENSE=" + v);
      if (negative && ability) {
        c.push("COMP=YABIL/NEG");
        c.push("SENSE=NEG");
      } else if (negative) {
        c.push("SENSE=NEG");
      } else if (ability) {
        c.push("COMP=YABIL");
      }
      continue;
    }
    if (k == "COMP") {
      if (v != "YABIL") throw Error("UNKNOWN-FEATURE", "no suffix for COMP=" + v);
      continue;
    }
    if (k == "TAM1") {
      tam1 = v;
      if (v == "AORIST") {
        if (negative) {
          auto agr = b.get("AGR").value_or("3SG");
          if (conv.empty() && (agr == "1SG" || agr == "1PL") && !b.get("CONV")) {
            c.push("AGR=" + agr + "/NEGAOR");
            neg_aorist_agr_done = true;
          } else {
            c.push("TAM1=AORIST/NEG");
          }
        } else {
          c.push(aorist_key(root, c, derived, ability && !negative, lex));
        }
      } else if (v != "IMP") {
        c.push("TAM1=" + v);
      }
      continue;
    }
    if (k == "TAM2") {
      tam2 = v;
      if (v != "PRES") c.push("TAM2=" + v);
      continue;
    }
    if (k == "CONV") {
      conv = v;
      if (v == "NOUN=MAK") {
        auto cs = b.get("CASE").value_or("NOM");
        c.push(cs == "ACC" || cs == "DAT" || cs == "GEN" ? "CONV=NOUN=MAK/V" : "CONV=NOUN=MAK");
      } else if (v == "VERB=NONE") {
        push_copula(c, b, i + 1);
        break;
      } else {
        c.push("CONV=" + v);
      }
      continue;
    }
    if (k == "AGR") {
      if (!conv.empty() || neg_aorist_agr_done || v == "3SG") continue;
      std::string series;
      if (tam1 == "IMP") series = "IMP";
      else if (tam1 == "OPT") series = "OPT";
      else if (tam2 == "PAST" || tam2 == "COND" || (tam2.empty() && (tam1 == "PAST" || tam1 == "COND")))
        series = "K";
      else
        series = "Z";
      std::string key = "AGR=" + v + "/" + series;
      if (!SuffixTable::builtin().contains(key)) {
        if (tam1 == "IMP" && v == "2SG") continue;
        throw Error("UNKNOWN-FEATURE", "no suffix for AGR=" + v + " in the " + series + " series");
      }
      c.push(key);
      continue;
    }
    if (k == "POSS") {
      if (v != "NONE") {
        c.push("POSS=" + v);
        possessed3 = v == "3SG" || v == "3PL";
      }
      continue;
    }
    if (k == "CASE") {
      push_case(c, v, possessed3);
      continue;
    }
    throw Error("UNKNOWN-FEATURE", "no suffix for " + k + "=" + v);
  }
  return c.str();
}

}  // namespace

std::string select_morphemes(const MorphBundle& b, const Lexicon& lex) {
  if (b.is_punct()) throw Error("UNKNOWN-FEATURE", "punctuation has no morphemes");
  auto cat = b.get("CAT");
  auto root = b.get("ROOT");
  if (!cat || !root) throw Error("UNKNOWN-FEATURE", "bundle needs CAT and ROOT");
  if (*cat == "NOUN" || *cat == "PRONOUN") {
    std::string form = select_nominal(b);
    auto entry = lex.lookup(*root, LexCategory::proper_noun);
    if (entry && *cat == "NOUN") {
      // proper nouns separate their suffixes with an apostrophe
      auto plus = form.find('+');
      if (plus != std::string::npos) form.insert(plus, "'");
    }
    return form;
  }
  if (*cat == "VERB") return select_verb(b, lex);
  if (*cat == "ADJ" || *cat == "ADVERB" || *cat == "CONN" || *cat == "POSTP") {
    Chain c(*root);
    for (std::size_t i = 0; i < b.features.size(); ++i) {
      const auto& [k, v] = b.features[i];
      if (k == "CAT" || k == "ROOT" || k == "TYPE") continue;
      if (k == "CONV" && v == "VERB=NONE") {
        push_copula(c, b, i + 1);
        break;
      }
      throw Error("UNKNOWN-FEATURE", "no suffix for " + k + "=" + v + " on " + *cat);
    }
    return c.str();
  }
  throw Error("UNKNOWN-FEATURE", "no morphotactics for CAT=" + *cat);
}

// ---------------------------------------------------------------------------
// Morphographemics

namespace {

struct Ellipsis {
  std::string_view full, short_;
};
constexpr std::array<Ellipsis, 13> kEllipsis{{
    {"metin", "metn"}, {"isim", "ism"}, {"resim", "resm"}, {"aGIz", "aGz"},
    {"burun", "burn"}, {"oGul", "oGl"}, {"alIn", "aln"}, {"boyun", "boyn"},
    {"karIn", "karn"}, {"Sehir", "Sehr"}, {"akIl", "akl"}, {"fikir", "fikr"},
    {"beyin", "beyn"},
}};

bool voiceless(char c) {
  switch (c) {
    case 'C': case 'f': case 'h': case 'k': case 'p': case 's': case 'S': case 't':
      return true;
    default:
      return false;
  }
}

bool back(char v) { return v == 'a' || v == 'I' || v == 'o' || v == 'u'; }
bool rounded(char v) { return v == 'o' || v == 'u' || v == 'O' || v == 'U'; }

char last_vowel(std::string_view s) {
  for (auto it = s.rbegin(); it != s.rend(); ++it)
    if (is_vowel(*it)) return *it;
  return 0;
}

char last_letter(std::string_view s) {
  for (auto it = s.rbegin(); it != s.rend(); ++it)
    if (*it != '\'' && *it != '-') return *it;
  return 0;
}

char resolve_A(char v) { return back(v) ? 'a' : 'e'; }
char resolve_H(char v) {
  if (back(v)) return rounded(v) ? 'u' : 'I';
  return rounded(v) ? 'U' : 'i';
}

std::vector<std::string> split_plus(std::string_view form) {
  std::vector<std::string> out(1);
  for (char c : form) {
    if (c == '+') out.emplace_back();
    else out.back() += c;
  }
  return out;
}

char devoice(char c) {
  switch (c) {
    case 'b': return 'p';
    case 'c': return 'C';
    case 'd': return 't';
    case 'g': return 'k';
    default: return c;
  }
}

}  // namespace

std::string apply_morphographemics(std::string_view form) {
  auto segs = split_plus(form);
  std::string out = segs[0];
  const bool poly_root = syllable_count(out) > 1;
  bool prev_is_root = true;
  bool first_suffix = true;

  for (std::size_t i = 1; i < segs.size(); ++i) {
    std::string seg = attach(out, segs[i]);
    if (seg.empty()) continue;

    if (seg.rfind("Hyor", 0) == 0 && ends_in_vowel(out)) {
      char removed = out.back();
      out.pop_back();
      char v = last_vowel(out);
      out += resolve_H(v ? v : removed);
      seg = seg.substr(1);
    }

    char first = seg[0];
    bool vowel_initial = is_vowel(first);
    char tail = last_letter(out);

    if (vowel_initial && prev_is_root && first_suffix) {
      for (const auto& e : kEllipsis)
        if (out == e.full) out = std::string(e.short_);
    }
    if (!vowel_initial && prev_is_root && poly_root && out.back() != '\'') {
      out.back() = devoice(out.back());
    } else if (!vowel_initial && prev_is_root && poly_root && out.size() > 1 && out.back() == '\'') {
      out[out.size() - 2] = devoice(out[out.size() - 2]);
    }
    if (vowel_initial && tail == 'k' && out.back() == 'k' && (!prev_is_root || poly_root) && segs[i] != "ki") {
      out.back() = out.size() > 1 && out[out.size() - 2] == 'n' ? 'g' : 'G';
    }

    for (char ch : seg) {
      switch (ch) {
        case 'A':
        case 'H': {
          char v = last_vowel(out);
          if (!v) throw Error("UNRESOLVABLE", "no vowel before '" + std::string(1, ch) + "' in " + std::string(form));
          out += ch == 'A' ? resolve_A(v) : resolve_H(v);
          break;
        }
        case 'D':
          out += voiceless(last_letter(out)) ? 't' : 'd';
          break;
        case 'C':
          out += voiceless(last_letter(out)) ? 'C' : 'c';
          break;
        default:
          out += ch;
      }
    }
    prev_is_root = false;
    first_suffix = false;
  }
  if (prev_is_root && poly_root && !out.empty()) out.back() = devoice(out.back());
  return out;
}

// ---------------------------------------------------------------------------
// Script conversion

namespace {

constexpr std::array<std::pair<char, std::string_view>, 6> kLetters{{
    {'C', "ç"}, {'S', "ş"}, {'G', "ğ"}, {'I', "ı"}, {'O', "ö"}, {'U', "ü"},
}};

}  // namespace

std::string transliterate(std::string_view s, Script target) {
  std::string out;
  out.reserve(s.size() + 8);
  if (target == Script::utf8) {
    for (char c : s) {
      bool mapped = false;
      for (const auto& [a, u] : kLetters) {
        if (a == c) {
          out += u;
          mapped = true;
          break;
        }
      }
      if (!mapped) out += c;
    }
    return out;
  }
  for (std::size_t i = 0; i < s.size();) {
    bool mapped = false;
    for (const auto& [a, u] : kLetters) {
      if (s.substr(i, u.size()) == u) {
        out += a;
        i += u.size();
        mapped = true;
        break;
      }
    }
    if (!mapped) out += s[i++];
  }
  return out;
}

std::string capitalize_utf8(std::string_view s) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 7> kUpper{{
      {"ç", "Ç"}, {"ş", "Ş"}, {"ğ", "Ğ"}, {"ı", "I"}, {"ö", "Ö"}, {"ü", "Ü"}, {"i", "İ"},
  }};
  if (s.empty()) return {};
  for (const auto& [lo, up] : kUpper)
    if (s.substr(0, lo.size()) == lo) return std::string(up) + std::string(s.substr(lo.size()));
  std::string out(s);
  if (out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 'a' + 'A');
  return out;
}

// ---------------------------------------------------------------------------
// Numerals

std::vector<std::string> number_words(int n) {
  static constexpr std::array<std::string_view, 10> ones{
      "", "bir", "iki", "UC", "dOrt", "beS", "altI", "yedi", "sekiz", "dokuz"};
  static constexpr std::array<std::string_view, 10> tens{
      "", "on", "yirmi", "otuz", "kIrk", "elli", "altmIS", "yetmiS", "seksen", "doksan"};
  if (n < 0 || n > 999999) throw Error("NUMBER-RANGE", "cannot spell " + std::to_string(n));
  if (n == 0) return {"sIfIr"};
  std::vector<std::string> words;
  if (n >= 1000) {
    if (n / 1000 > 1) words = number_words(n / 1000);
    words.emplace_back("bin");
    n %= 1000;
  }
  int h = n / 100, t = (n / 10) % 10, o = n % 10;
  if (h > 1) words.emplace_back(ones[h]);
  if (h) words.emplace_back("yUz");
  if (t) words.emplace_back(tens[t]);
  if (o) words.emplace_back(ones[o]);
  return words;
}

std::vector<std::string> ordinal_words(int n) {
  auto words = number_words(n);
  std::string& last = words.back();
  std::string stem = last == "dOrt" ? "dOrd" : last;
  last = apply_morphographemics(stem + "+" + SuffixTable::builtin().at("ORDINAL"));
  return words;
}

}  // namespace tactgen
