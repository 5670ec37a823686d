#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tactgen/caseframe.hpp"
#include "tactgen/lexicon.hpp"

namespace tactgen {

// One word as an ordered list of abstract features, or a punctuation mark.
struct MorphBundle {
  std::vector<std::pair<std::string, std::string>> features;
  std::string punct;  // "PERIOD", "COMMA", "QUESTION" for punctuation tokens

  bool is_punct() const noexcept { return !punct.empty(); }
  // First value stored under `key`, if any.
  std::optional<std::string> get(std::string_view key) const;
  MorphBundle& add(std::string key, std::string value);

  // `[[K=V][K=V]...]` or `[PERIOD]`.
  std::string format() const;
  static MorphBundle parse(std::string_view text);

  friend bool operator==(const MorphBundle&, const MorphBundle&) = default;
};

MorphBundle punctuation(std::string_view name);

// Word-level realization tasks handed to emit_bundle.

struct Copula {
  bool past = false;
  Agreement agr;
  friend bool operator==(const Copula&, const Copula&) = default;
};

struct NominalTask {
  std::string root;
  bool pronoun = false;
  Agreement agr;
  std::optional<Agreement> poss;
  Case case_ = Case::nom;
  bool rel = false;                     // +ki
  std::optional<Agreement> ki_agr;      // number marking after +ki
  std::optional<Case> ki_case;          // case marking after +ki
  std::optional<std::string> derivation;  // LIK, LI or SIZ
  std::optional<Copula> copula;
  friend bool operator==(const NominalTask&, const NominalTask&) = default;
};

enum class VerbForm { finite, while_, infinitive, fact, participle, adverb };

struct VerbTask {
  std::string root;
  Voice voice = Voice::active;
  bool negative = false;
  bool ability = false;
  VerbForm form = VerbForm::finite;
  std::string tam1;                 // finite and while forms
  std::optional<std::string> tam2;  // finite only
  Agreement agr;                    // finite agreement
  std::string conv;                 // MAK, MA, IS, DIK, YACAK, YAN, MIS, YARAK, ...
  std::optional<Agreement> poss;
  bool show_poss = true;            // infinitive/fact forms always print POSS
  Case case_ = Case::nom;
  std::optional<Copula> copula;
  friend bool operator==(const VerbTask&, const VerbTask&) = default;
};

// Uninflected words: ADJ, ADVERB, CONN, POSTP.
struct SimpleTask {
  std::string cat;
  std::string root;
  std::optional<std::string> type;
  std::optional<Copula> copula;
  friend bool operator==(const SimpleTask&, const SimpleTask&) = default;
};

using WordTask = std::variant<NominalTask, VerbTask, SimpleTask>;

MorphBundle emit_bundle(const WordTask& task);

// Metaform inventory keyed by abstract feature name.
class SuffixTable {
 public:
  static const SuffixTable& builtin();
  // Tab-separated `FEATURE<TAB>metaform` lines, `#` comments.
  static SuffixTable parse(std::string_view text);

  const std::string& at(std::string_view key) const;  // throws UNKNOWN-FEATURE
  bool contains(std::string_view key) const;
  const std::map<std::string, std::string, std::less<>>& entries() const { return entries_; }

  friend bool operator==(const SuffixTable&, const SuffixTable&) = default;

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

// Root plus `+`-joined suffix metaforms, e.g. "kalem+Hm+Hn".
std::string select_morphemes(const MorphBundle& b, const Lexicon& lex);

// Rewrites an intermediate form to a surface word in the ASCII transliteration.
std::string apply_morphographemics(std::string_view form);

enum class Script { ascii, utf8 };
std::string transliterate(std::string_view s, Script target);

// Uppercases the first letter of a UTF-8 string with Turkish dotted/dotless i.
std::string capitalize_utf8(std::string_view s);

// Turkish number words in transliteration, split into words ("yirmi", "iki").
std::vector<std::string> number_words(int n);
// Ordinal words; only the last word takes the ordinal suffix.
std::vector<std::string> ordinal_words(int n);

bool is_vowel(char c);

}  // namespace tactgen
