#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "tactgen/error.hpp"
#include "tactgen/morph.hpp"

using namespace tactgen;

namespace {

std::string surface(std::string_view bundle) {
  return apply_morphographemics(select_morphemes(MorphBundle::parse(bundle), oracle::lexicon()));
}

}  // namespace

TEST_CASE("bundle text round-trips") {
  const std::string text = "[[CAT=NOUN][ROOT=kalem][AGR=3SG][POSS=1SG][CASE=GEN]]";
  auto b = MorphBundle::parse(text);
  CHECK(b.format() == text);
  CHECK(b.get("POSS") == "1SG");
  CHECK_FALSE(b.get("TAM1").has_value());
  CHECK(MorphBundle::parse("[PERIOD]").is_punct());
  CHECK(punctuation("COMMA").format() == "[COMMA]");
}

TEST_CASE("nominal inflection") {
  CHECK(surface("[[CAT=NOUN][ROOT=kalem][AGR=3SG][POSS=1SG][CASE=GEN]]") == "kalemimin");
  CHECK(surface("[[CAT=NOUN][ROOT=kitab][AGR=3PL][POSS=NONE][CASE=NOM]]") == "kitaplar");
  CHECK(surface("[[CAT=NOUN][ROOT=kitab][AGR=3SG][POSS=NONE][CASE=ACC]]") == "kitabI");
  CHECK(surface("[[CAT=NOUN][ROOT=ev][AGR=3PL][POSS=NONE][CASE=ABL]]") == "evlerden");
  CHECK(surface("[[CAT=NOUN][ROOT=elma][AGR=3SG][POSS=NONE][CASE=DAT]]") == "elmaya");
  CHECK(surface("[[CAT=NOUN][ROOT=masa][AGR=3SG][POSS=3SG][CASE=LOC]]") == "masasInda");
  CHECK(surface("[[CAT=NOUN][ROOT=kalem][AGR=3SG][POSS=NONE][CASE=INS]]") == "kalemle");
  CHECK(surface("[[CAT=NOUN][ROOT=oda][AGR=3SG][POSS=NONE][CASE=INS]]") == "odayla");
  CHECK(surface("[[CAT=NOUN][ROOT=kitab][AGR=3SG][POSS=NONE][CASE=LOC]]") == "kitapta");
}

TEST_CASE("verbal inflection") {
  CHECK(surface("[[CAT=VERB][ROOT=gel][SENSE=POS][TAM1=PROG1][AGR=1SG]]") == "geliyorum");
  CHECK(surface("[[CAT=VERB][ROOT=ver][SENSE=POS][TAM1=PAST][AGR=3SG]]") == "verdi");
  CHECK(surface("[[CAT=VERB][ROOT=oku][SENSE=NEG][TAM1=PAST][AGR=1PL]]") == "okumadIk");
  CHECK(surface("[[CAT=VERB][ROOT=gel][SENSE=POS][TAM1=FUT][AGR=3SG]]") == "gelecek");
}

TEST_CASE("every vowel harmonizes every metaform") {
  for (const auto& [feature, metaform] : SuffixTable::builtin().entries()) {
    for (char v : oracle::kVowels) {
      std::string stem = std::string("k") + v + "t";
      std::string form = apply_morphographemics(stem + "+" + metaform);
      CAPTURE(feature);
      CAPTURE(stem);
      CHECK(oracle::vowels_of(form).substr(1) == oracle::harmony_vowels(v, metaform));
      CHECK_FALSE(oracle::has_metaphoneme(form));
    }
  }
}

TEST_CASE("shipped suffix file matches the builtin table") {
  auto file = SuffixTable::parse(oracle::read_file(TACTGEN_DATA_DIR "/suffixes.tsv"));
  CHECK(file == SuffixTable::builtin());
  CHECK_THROWS_AS(SuffixTable::builtin().at("NOT=A-FEATURE"), Error);
}

TEST_CASE("unknown feature values are reported") {
  auto b = MorphBundle::parse("[[CAT=VERB][ROOT=gel][SENSE=POS][TAM1=BOGUS][AGR=3SG]]");
  try {
    select_morphemes(b, oracle::lexicon());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "UNKNOWN-FEATURE");
  }
}

TEST_CASE("script conversion") {
  CHECK(transliterate("kIrmIzI CiCekler gOrUSUrUz", Script::utf8) == "kırmızı çiçekler görüşürüz");
  CHECK(transliterate("kırmızı çiçekler", Script::ascii) == "kIrmIzI CiCekler");
  CHECK(transliterate("aGaC", Script::utf8) == "ağaç");
  CHECK(capitalize_utf8("ışık") == "Işık");
  CHECK(capitalize_utf8("istanbul") == "İstanbul");
  CHECK(capitalize_utf8("adam") == "Adam");
}

TEST_CASE("number words") {
  CHECK(number_words(2) == std::vector<std::string>{"iki"});
  CHECK(number_words(21) == std::vector<std::string>{"yirmi", "bir"});
  CHECK(number_words(100) == std::vector<std::string>{"yUz"});
  CHECK(number_words(1984) == std::vector<std::string>{"bin", "dokuz", "yUz", "seksen", "dOrt"});
  CHECK(ordinal_words(3) == std::vector<std::string>{"UCUncU"});
  CHECK(ordinal_words(22) == std::vector<std::string>{"yirmi", "ikinci"});
}
