#include "tactgen/lexicon.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "tactgen/error.hpp"

namespace tactgen {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool valid_root_char(char c) {
  if (c >= 'a' && c <= 'z') return true;
  switch (c) {
    case 'C': case 'S': case 'G': case 'I': case 'O': case 'U': case '-':
      return true;
    default:
      return false;
  }
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error("LEX-SYNTAX", "line " + std::to_string(line) + ": " + what);
}

bool parse_bool(std::string_view v, std::size_t line, std::string_view key) {
  if (v == "true" || v == "+" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "-" || v == "no" || v == "0") return false;
  syntax_error(line, "bad boolean for " + std::string(key) + ": " + std::string(v));
}

constexpr std::array<std::pair<LexCategory, std::string_view>, 9> kCategoryNames{{
    {LexCategory::noun, "noun"},
    {LexCategory::proper_noun, "proper-noun"},
    {LexCategory::pronoun, "pronoun"},
    {LexCategory::verb, "verb"},
    {LexCategory::adjective, "adjective"},
    {LexCategory::adverb, "adverb"},
    {LexCategory::postposition, "postposition"},
    {LexCategory::quantifier, "quantifier"},
    {LexCategory::conjunction, "conjunction"},
}};

constexpr std::array<std::pair<Case, std::string_view>, 7> kCaseNames{{
    {Case::nom, "nom"},
    {Case::acc, "acc"},
    {Case::dat, "dat"},
    {Case::loc, "loc"},
    {Case::abl, "abl"},
    {Case::gen, "gen"},
    {Case::ins, "ins"},
}};

}  // namespace

std::string_view to_string(LexCategory c) {
  for (const auto& [k, v] : kCategoryNames)
    if (k == c) return v;
  return "?";
}

std::optional<LexCategory> parse_lex_category(std::string_view s) {
  for (const auto& [k, v] : kCategoryNames)
    if (v == s) return k;
  return std::nullopt;
}

std::string_view to_string(Case c) {
  for (const auto& [k, v] : kCaseNames)
    if (k == c) return v;
  return "?";
}

std::optional<Case> parse_case(std::string_view s) {
  for (const auto& [k, v] : kCaseNames)
    if (v == s) return k;
  return std::nullopt;
}

int syllable_count(std::string_view root) {
  int n = 0;
  for (char c : root) {
    switch (c) {
      case 'a': case 'e': case 'i': case 'o': case 'u': case 'I': case 'O': case 'U':
        ++n;
        break;
      default:
        break;
    }
  }
  return n;
}

AoristAllomorph default_aorist(std::string_view root) {
  return syllable_count(root) > 1 ? AoristAllomorph::Hr : AoristAllomorph::Ar;
}

Lexicon Lexicon::parse(std::string_view text) {
  Lexicon lex;
  std::size_t line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto cols = split(line, '\t');
    if (cols.size() < 2 || cols.size() > 3) syntax_error(line_no, "expected root<TAB>category[<TAB>features]");

    LexEntry e;
    e.root = std::string(trim(cols[0]));
    if (e.root.empty()) syntax_error(line_no, "empty root");
    for (char c : e.root)
      if (!valid_root_char(c)) syntax_error(line_no, "root '" + e.root + "' has a character outside the transliteration alphabet");

    auto cat = parse_lex_category(trim(cols[1]));
    if (!cat) syntax_error(line_no, "unknown category '" + std::string(trim(cols[1])) + "'");
    e.category = *cat;
    if (e.category == LexCategory::quantifier) e.quant = QuantifierInfo{};

    if (cols.size() == 3) {
      for (std::string_view kv : split(cols[2], ';')) {
        kv = trim(kv);
        if (kv.empty()) continue;
        auto eq = kv.find('=');
        if (eq == std::string_view::npos) syntax_error(line_no, "feature without '=': " + std::string(kv));
        std::string_view key = trim(kv.substr(0, eq));
        std::string_view val = trim(kv.substr(eq + 1));

        auto need_quant = [&] {
          if (!e.quant) syntax_error(line_no, std::string(key) + " is only valid on quantifiers");
          return &*e.quant;
        };

        if (key == "temporal") e.sem.temporal = parse_bool(val, line_no, key);
        else if (key == "container") e.sem.container = parse_bool(val, line_no, key);
        else if (key == "measure") e.sem.measure = parse_bool(val, line_no, key);
        else if (key == "countable") e.sem.countable = parse_bool(val, line_no, key);
        else if (key == "material") e.sem.material = parse_bool(val, line_no, key);
        else if (key == "gradable") e.gradable = parse_bool(val, line_no, key);
        else if (key == "color") e.color = parse_bool(val, line_no, key);
        else if (key == "head_number") {
          auto* q = need_quant();
          if (val == "requires-singular") q->head_number = HeadNumber::requires_singular;
          else if (val == "requires-plural") q->head_number = HeadNumber::requires_plural;
          else if (val == "any") q->head_number = HeadNumber::any;
          else syntax_error(line_no, "bad head_number: " + std::string(val));
        } else if (key == "head_countability") {
          auto* q = need_quant();
          if (val == "countable") q->head_countability = HeadCountability::countable;
          else if (val == "uncountable") q->head_countability = HeadCountability::uncountable;
          else if (val == "any") q->head_countability = HeadCountability::any;
          else syntax_error(line_no, "bad head_countability: " + std::string(val));
        } else if (key == "allows_dem") {
          need_quant()->allows_demonstrative = parse_bool(val, line_no, key);
        } else if (key == "dem_order") {
          auto* q = need_quant();
          if (val == "dem-before-quant") q->dem_order = DemOrder::dem_before_quant;
          else if (val == "quant-before-dem") q->dem_order = DemOrder::quant_before_dem;
          else syntax_error(line_no, "bad dem_order: " + std::string(val));
        } else if (key == "allows_cardinal") {
          need_quant()->allows_cardinal = parse_bool(val, line_no, key);
        } else if (key == "aorist") {
          if (val == "Ar") e.aorist_allomorph = AoristAllomorph::Ar;
          else if (val == "Hr") e.aorist_allomorph = AoristAllomorph::Hr;
          else if (val == "z-only") e.aorist_allomorph = AoristAllomorph::z_only;
          else syntax_error(line_no, "bad aorist: " + std::string(val));
        } else if (key == "subcat") {
          auto c = parse_case(val);
          if (!c || *c == Case::acc) syntax_error(line_no, "bad subcat: " + std::string(val));
          e.postp_subcat = c;
        } else {
          syntax_error(line_no, "unknown key '" + std::string(key) + "'");
        }
      }
    }

    if (e.category == LexCategory::postposition && !e.postp_subcat) e.postp_subcat = Case::nom;
    if (e.category != LexCategory::postposition && e.postp_subcat)
      syntax_error(line_no, "subcat is only valid on postpositions");

    auto key = std::make_pair(e.root, e.category);
    if (lex.entries_.count(key))
      throw Error("LEX-DUPLICATE", "line " + std::to_string(line_no) + ": duplicate entry " + e.root + " (" +
                                       std::string(to_string(e.category)) + ")");
    lex.entries_.emplace(std::move(key), std::move(e));
  }
  return lex;
}

Lexicon Lexicon::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IO", "cannot read lexicon file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::optional<LexEntry> Lexicon::lookup(std::string_view root, LexCategory category) const {
  auto it = entries_.find(std::make_pair(std::string(root), category));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

LexEntry Lexicon::synthesize(std::string_view root, LexCategory category) {
  LexEntry e;
  e.root = std::string(root);
  e.category = category;
  if (category == LexCategory::verb) e.aorist_allomorph = AoristAllomorph::Hr;
  if (category == LexCategory::quantifier) e.quant = QuantifierInfo{};
  if (category == LexCategory::postposition) e.postp_subcat = Case::nom;
  return e;
}

LexEntry Lexicon::entry_or_default(std::string_view root, LexCategory category) const {
  if (auto e = lookup(root, category)) return *e;
  return synthesize(root, category);
}

std::optional<LexEntry> Lexicon::find_any(std::string_view root) const {
  static constexpr LexCategory kPreference[] = {
      LexCategory::noun,   LexCategory::proper_noun,  LexCategory::pronoun,    LexCategory::adjective,
      LexCategory::adverb, LexCategory::postposition, LexCategory::quantifier, LexCategory::conjunction,
      LexCategory::verb};
  for (LexCategory c : kPreference)
    if (auto e = lookup(root, c)) return e;
  return std::nullopt;
}

std::vector<LexEntry> Lexicon::entries() const {
  std::vector<LexEntry> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_) out.push_back(v);
  return out;
}

}  // namespace tactgen
