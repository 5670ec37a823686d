#include "doctest.h"
#include "oracles.hpp"
#include "tactgen/error.hpp"
#include "tactgen/golden.hpp"
#include "tactgen/pipeline.hpp"

using namespace tactgen;

namespace {

std::string say(const CaseFrame& cf) { return generate(oracle::sentence(cf), oracle::lexicon()).surface_utf8; }

CaseFrame came(std::string who = "adam") {
  return oracle::frame("gel", {{Label::subject, oracle::noun(std::move(who))}});
}

}  // namespace

TEST_CASE("corpus outputs") {
  for (auto name : oracle::kCorpusNames) {
    CAPTURE(name);
    auto r = generate(oracle::read_file(oracle::corpus_path(name, ".cf")), oracle::lexicon());
    CHECK(normalize_corpus_text(r.corpus_format()) ==
          normalize_corpus_text(oracle::read_file(oracle::corpus_path(name, ".out"))));
    CHECK(r.bundles.size() == r.tokens.size());
  }
}

TEST_CASE("generation is deterministic") {
  auto text = oracle::read_file(oracle::corpus_path("appc2", ".cf"));
  auto a = generate(text, oracle::lexicon());
  auto b = generate(text, oracle::lexicon());
  CHECK(a.corpus_format() == b.corpus_format());
  CHECK(a.surface_utf8 == b.surface_utf8);
}

TEST_CASE("tense, aspect and polarity") {
  CHECK(say(came()) == "Adam geldi.");
  auto cf = came();
  cf.verb->negative = true;
  CHECK(say(cf) == "Adam gelmedi.");
  cf = came();
  cf.verb->tense = Tense::present;
  cf.verb->aspect = Aspect::progressive;
  CHECK(say(cf) == "Adam geliyor.");
  cf = came();
  cf.verb->tense = Tense::future;
  cf.verb->aspect.reset();
  CHECK(say(cf) == "Adam gelecek.");
  cf = came();
  cf.verb->aspect = Aspect::narrative;
  CHECK(say(cf) == "Adam gelmiş.");
}

TEST_CASE("pronoun subjects drive agreement") {
  CName ben;
  ben.referent = Referent{};
  ben.referent->bcon = BCon{"ben", {}};
  ben.referent->agr = Agreement{Number::singular, 1};
  auto cf = oracle::frame("gel", {{Label::subject, ben}});
  auto out = say(cf);
  CHECK(out.find("geldim.") != std::string::npos);
}

TEST_CASE("yes/no question") {
  auto cf = came();
  cf.speech_act = SpeechAct::interrogative;
  cf.ques = Question{Question::Type::yes_no, {}};
  auto r = generate(oracle::sentence(cf), oracle::lexicon());
  CHECK(r.surface_utf8 == "Adam geldi mi?");
  CHECK(r.bundles.back().punct == "QUESTION");
}

TEST_CASE("clitics harmonize with the preceding word") {
  auto cf = came();
  cf.es = EmphasisSites{std::nullopt, Label::subject, std::nullopt};
  CHECK(say(cf) == "Adam da geldi.");
  cf = came("kadIn");
  cf.es = EmphasisSites{std::nullopt, Label::subject, std::nullopt};
  CHECK(say(cf) == "Kadın da geldi.");
  cf = came("ev");
  cf.es = EmphasisSites{std::nullopt, Label::subject, std::nullopt};
  CHECK(say(cf) == "Ev de geldi.");
}

TEST_CASE("existential clauses") {
  auto cf = oracle::frame("var", {{Label::subject, oracle::noun("kitab")}});
  cf.clause_type = ClauseType::existential;
  cf.verb->tense = Tense::present;
  cf.verb->aspect.reset();
  CHECK(say(cf) == "Kitap var.");
  cf.verb->negative = true;
  CHECK(say(cf) == "Kitap yok.");
  cf.verb->negative = false;
  cf.verb->tense = Tense::past;
  CHECK(say(cf) == "Kitap vardı.");
}

TEST_CASE("linked and conjoined sentences") {
  ComplexSentence because{Linked{"cause-result", oracle::sentence(came()), oracle::sentence(came("kadIn"))}};
  CHECK(generate(because, oracle::lexicon()).surface_utf8 == "Adam geldiği için kadın geldi.");

  ComplexSentence both{Conjoined{"and", {oracle::sentence(came()), oracle::sentence(came("kadIn"))}}};
  CHECK(generate(both, oracle::lexicon()).surface_utf8 == "Adam geldi ve kadın geldi.");
}

TEST_CASE("proper nouns are capitalized in the utf8 surface") {
  CName a = oracle::noun("aySe");
  auto cf = oracle::frame("ver", {{Label::subject, oracle::noun("adam")},
                                  {Label::dir_obj, oracle::noun("kitab", false, true)},
                                  {Label::goal, a}});
  auto r = generate(oracle::sentence(cf), oracle::lexicon());
  CHECK(r.surface_utf8 == "Adam kitabı Ayşe'ye verdi.");
  CHECK(r.surface_ascii.find("aySe") != std::string::npos);
}

TEST_CASE("validation gates generation unless forced") {
  auto cf = came();
  cf.is = InformationStructure{Label::subject, Label::subject, std::nullopt};
  try {
    generate(oracle::sentence(cf), oracle::lexicon());
    FAIL("expected a violation");
  } catch (const Error& e) {
    CHECK(e.code() == "IS-DUPLICATE");
  }
  auto no_verb = came();
  no_verb.verb.reset();
  try {
    generate(oracle::sentence(no_verb), oracle::lexicon(), GenerateOptions{true});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "VERB-REQUIRED");
  }
}

TEST_CASE("batch generation isolates failures") {
  auto good = oracle::read_file(oracle::corpus_path("ex1", ".cf"));
  auto items = generate_batch({{"good", good}, {"broken", "((s-form"}, {"again", good}}, oracle::lexicon());
  REQUIRE(items.size() == 3);
  CHECK(items[0].ok);
  CHECK_FALSE(items[1].ok);
  CHECK(items[1].error_code == "SEXPR-UNBALANCED");
  CHECK(items[2].ok);
  CHECK(items[2].result.surface_utf8 == "Adam elmayı kadına verdi.");
}
