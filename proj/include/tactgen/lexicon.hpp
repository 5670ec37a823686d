#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tactgen {

enum class LexCategory {
  noun,
  proper_noun,
  pronoun,
  verb,
  adjective,
  adverb,
  postposition,
  quantifier,
  conjunction
};

enum class Case { nom, acc, dat, loc, abl, gen, ins };

struct SemFeatures {
  bool temporal = false;
  bool container = false;
  bool measure = false;
  bool countable = false;
  bool material = false;

  friend bool operator==(const SemFeatures&, const SemFeatures&) = default;
};

enum class HeadNumber { requires_singular, requires_plural, any };
enum class HeadCountability { countable, uncountable, any };
enum class DemOrder { dem_before_quant, quant_before_dem };

struct QuantifierInfo {
  HeadNumber head_number = HeadNumber::any;
  HeadCountability head_countability = HeadCountability::any;
  bool allows_demonstrative = true;
  DemOrder dem_order = DemOrder::dem_before_quant;
  bool allows_cardinal = true;

  friend bool operator==(const QuantifierInfo&, const QuantifierInfo&) = default;
};

enum class AoristAllomorph { Ar, Hr, z_only };

struct LexEntry {
  std::string root;
  LexCategory category = LexCategory::noun;
  SemFeatures sem;
  std::optional<QuantifierInfo> quant;
  std::optional<AoristAllomorph> aorist_allomorph;
  std::optional<Case> postp_subcat;
  bool gradable = false;
  bool color = false;

  friend bool operator==(const LexEntry&, const LexEntry&) = default;
};

class Lexicon {
 public:
  Lexicon() = default;

  // Parses the tab-separated lexicon format. Throws Error with code
  // LEX-SYNTAX (message carries the line number) or LEX-DUPLICATE.
  static Lexicon parse(std::string_view text);
  static Lexicon load_file(const std::string& path);

  std::optional<LexEntry> lookup(std::string_view root, LexCategory category) const;

  // Fallback entry for roots missing from the lexicon.
  static LexEntry synthesize(std::string_view root, LexCategory category);

  // Lookup that never misses: the stored entry or a synthesized one.
  LexEntry entry_or_default(std::string_view root, LexCategory category) const;

  // Any stored entry for the root, preferring noun-like categories.
  std::optional<LexEntry> find_any(std::string_view root) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::vector<LexEntry> entries() const;

 private:
  std::map<std::pair<std::string, LexCategory>, LexEntry, std::less<>> entries_;
};

std::string_view to_string(LexCategory c);
std::optional<LexCategory> parse_lex_category(std::string_view s);
std::string_view to_string(Case c);
std::optional<Case> parse_case(std::string_view s);

// Number of vowels in an ASCII-transliterated root.
int syllable_count(std::string_view root);

// Default aorist allomorph by the mono/polysyllabic rule.
AoristAllomorph default_aorist(std::string_view root);

}  // namespace tactgen
