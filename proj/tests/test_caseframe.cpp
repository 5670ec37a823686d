#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "tactgen/caseframe.hpp"
#include "tactgen/error.hpp"
#include "tactgen/sexpr.hpp"

using namespace tactgen;

namespace {

bool has_rule(const std::vector<Violation>& vs, std::string_view rule) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.rule == rule; });
}

std::string parse_error(std::string_view text) {
  try {
    parse_case_frame(text);
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("corpus inputs survive serialize and reparse") {
  for (auto name : oracle::kCorpusNames) {
    CAPTURE(name);
    auto first = parse_case_frame(oracle::read_file(oracle::corpus_path(name, ".cf")));
    auto text = serialize(first);
    auto second = parse_case_frame(text);
    CHECK(first == second);
    CHECK(serialize(second) == text);
    CHECK(validate(first, oracle::lexicon()).empty());
  }
}

TEST_CASE("parsed fields") {
  auto cs = parse_case_frame(oracle::read_file(oracle::corpus_path("ex1", ".cf")));
  const auto& cf = std::get<CaseFrame>(cs.node);
  REQUIRE(cf.verb);
  CHECK(cf.verb->root == "ver");
  CHECK(cf.verb->tense == Tense::past);
  CHECK(cf.arguments.size() == 3);
  const CName* obj = cf.constituent(Label::dir_obj);
  REQUIRE(obj);
  CHECK(obj->specifier->quan->definite == true);
  CHECK(referent_agr(*obj) == Agreement{Number::singular, 3});
  CHECK_FALSE(is_indefinite(*obj));
}

TEST_CASE("syntax errors") {
  CHECK(parse_error("((s-form finite)") == "SEXPR-UNBALANCED");
  CHECK(parse_error("") == "SEXPR-EMPTY");
  CHECK(parse_error("((s-form finite)) extra") == "SEXPR-TRAILING");
  CHECK(parse_error("((s-form sideways) (verb ((root \"gel\"))))") == "TYPE-MISMATCH");
  auto lenient = parse_case_frame_detailed("((verb ((root \"gel\"))) (bogus-slot 1))");
  CHECK_FALSE(lenient.warnings.empty());
}

TEST_CASE("s-expression reader") {
  auto n = read_sexpr("(a (b \"c d\") ; comment\n e)");
  REQUIRE(n.items.size() == 3);
  CHECK(n.items[1].items[1].kind == SExpr::Kind::string);
  CHECK(n.items[1].items[1].text == "c d");
  auto again = read_sexpr(write_sexpr(n));
  CHECK(write_sexpr(again) == write_sexpr(n));
}

TEST_CASE("validation rules") {
  const auto& lex = oracle::lexicon();

  SUBCASE("missing verb") {
    auto cs = parse_case_frame(oracle::read_file(TACTGEN_DATA_DIR "/../tests/data/no_verb.cf"));
    CHECK(has_rule(validate(cs, lex), "VERB-REQUIRED"));
  }
  SUBCASE("argument label not allowed for the clause type") {
    auto cf = oracle::frame("ver", {{Label::subject, oracle::noun("adam")}});
    cf.arguments[Label::pred_property] = oracle::noun("kitab");
    CHECK(has_rule(validate(oracle::sentence(cf), lex), "CLAUSE-LABEL"));
  }
  SUBCASE("information structure names an absent constituent") {
    auto cf = oracle::frame("ver", {{Label::subject, oracle::noun("adam")}});
    cf.is = InformationStructure{Label::goal, std::nullopt, std::nullopt};
    CHECK(has_rule(validate(oracle::sentence(cf), lex), "IS-UNKNOWN-LABEL"));
  }
  SUBCASE("one label in two slots") {
    auto cf = oracle::frame("ver", {{Label::subject, oracle::noun("adam")}});
    cf.is = InformationStructure{Label::subject, Label::subject, std::nullopt};
    CHECK(has_rule(validate(oracle::sentence(cf), lex), "IS-DUPLICATE"));
  }
  SUBCASE("emphasis on an absent constituent") {
    auto cf = oracle::frame("ver", {{Label::subject, oracle::noun("adam")}});
    cf.es = EmphasisSites{Label::goal, std::nullopt, std::nullopt};
    CHECK(has_rule(validate(oracle::sentence(cf), lex), "ES-UNKNOWN-LABEL"));
  }
  SUBCASE("possessor agreement") {
    CName c = oracle::noun("kitab");
    c.referent->poss = Agreement{Number::singular, 1};
    c.possessor = Possessor{{oracle::noun("adam")}, false, false};
    CHECK(has_rule(validate(c, lex), "POSS-AGR"));
    c.referent->poss = Agreement{Number::singular, 3};
    CHECK_FALSE(has_rule(validate(c, lex), "POSS-AGR"));
  }
  SUBCASE("conjunction arity") {
    CName c;
    c.conj_list = ConjList{"and", {oracle::noun("adam")}};
    CHECK(has_rule(validate(c, lex), "CONJ-ARITY"));
  }
  SUBCASE("number range") {
    CName c = oracle::noun("elma");
    c.modifier = ModifierBlock{};
    c.modifier->quan_mod = NumberQuantity{3, 2};
    CHECK(has_rule(validate(c, lex), "NUMBER-RANGE"));
  }
  SUBCASE("violations carry a path") {
    auto cf = oracle::frame("ver", {{Label::subject, oracle::noun("adam")}});
    cf.is = InformationStructure{Label::goal, std::nullopt, std::nullopt};
    auto vs = validate(oracle::sentence(cf), lex);
    REQUIRE_FALSE(vs.empty());
    CHECK_FALSE(vs.front().path.empty());
  }
}

TEST_CASE("label names round-trip") {
  for (int i = 0; i <= static_cast<int>(Label::verb); ++i) {
    auto l = static_cast<Label>(i);
    CHECK(parse_label(to_string(l)) == l);
  }
  CHECK(agreement_code(Agreement{Number::plural, 1}) == "1PL");
}
