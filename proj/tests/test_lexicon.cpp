#include <regex>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "tactgen/error.hpp"
#include "tactgen/golden.hpp"
#include "tactgen/lexicon.hpp"
#include "tactgen/morph.hpp"

using namespace tactgen;

namespace {

std::string error_code(std::string_view text) {
  try {
    Lexicon::parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("every corpus root is in the lexicon") {
  const std::regex root_re(R"(\[ROOT=([^\]]+)\])");
  // Numerals are spelled by the generator, not looked up.
  std::set<std::string> numerals;
  for (int n = 1; n < 100; ++n) {
    for (const auto& w : number_words(n)) numerals.insert(w);
    for (const auto& w : ordinal_words(n)) numerals.insert(w);
  }
  std::set<std::string> missing;
  for (auto name : oracle::kCorpusNames) {
    std::string text = normalize_corpus_text(oracle::read_file(oracle::corpus_path(name, ".out")));
    for (std::sregex_iterator it(text.begin(), text.end(), root_re), end; it != end; ++it) {
      std::string root = (*it)[1];
      if (!numerals.count(root) && !oracle::lexicon().find_any(root)) missing.insert(root);
    }
  }
  CHECK(missing.empty());
  for (const auto& r : missing) MESSAGE("missing root " << r);
}

TEST_CASE("entries carry their features") {
  const auto& lex = oracle::lexicon();
  auto her = lex.lookup("her", LexCategory::quantifier);
  REQUIRE(her);
  REQUIRE(her->quant);
  CHECK(her->quant->head_number == HeadNumber::requires_singular);
  CHECK_FALSE(her->quant->allows_demonstrative);

  auto butun = lex.lookup("bUtUn", LexCategory::quantifier);
  REQUIRE(butun);
  CHECK(butun->quant->dem_order == DemOrder::quant_before_dem);

  auto icin = lex.lookup("iCin", LexCategory::postposition);
  REQUIRE(icin);
  CHECK(icin->postp_subcat.has_value());

  CHECK_FALSE(lex.lookup("adam", LexCategory::verb));
  CHECK(lex.lookup("adam", LexCategory::noun));
}

TEST_CASE("missing roots get a synthesized entry") {
  auto e = oracle::lexicon().entry_or_default("zzyzx", LexCategory::noun);
  CHECK(e.root == "zzyzx");
  CHECK(e.category == LexCategory::noun);
}

TEST_CASE("aorist allomorph by syllable count") {
  CHECK(syllable_count("gel") == 1);
  CHECK(syllable_count("gOster") == 2);
  CHECK(default_aorist("yat") == AoristAllomorph::Ar);
  CHECK(default_aorist("gOster") == AoristAllomorph::Hr);
  CHECK(default_aorist("oku") == AoristAllomorph::Hr);
}

TEST_CASE("parse errors") {
  CHECK(error_code("adam\tnoun\nadam\tnoun\n") == "LEX-DUPLICATE");
  CHECK(error_code("adam\tnot-a-category\n") == "LEX-SYNTAX");
  CHECK(error_code("adam\n") == "LEX-SYNTAX");
  CHECK(error_code("# only a comment\n\nadam\tnoun\tcountable=true\n").empty());
  try {
    Lexicon::parse("adam\tnoun\nev\tnope\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
}

TEST_CASE("category names round-trip") {
  for (auto c : {LexCategory::noun, LexCategory::proper_noun, LexCategory::pronoun, LexCategory::verb,
                 LexCategory::adjective, LexCategory::adverb, LexCategory::postposition,
                 LexCategory::quantifier, LexCategory::conjunction}) {
    CHECK(parse_lex_category(to_string(c)) == c);
  }
  for (auto c : {Case::nom, Case::acc, Case::dat, Case::loc, Case::abl, Case::gen, Case::ins}) {
    CHECK(parse_case(to_string(c)) == c);
  }
}
