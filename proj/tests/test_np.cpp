#include "doctest.h"
#include "np_inputs.hpp"
#include "oracles.hpp"
#include "tactgen/error.hpp"
#include "tactgen/np.hpp"
#include "tactgen/pipeline.hpp"

using namespace tactgen;

namespace {

std::string utf8(const CName& c, Case case_ = Case::nom) {
  return generate_np(c, oracle::lexicon(), case_).surface_utf8;
}

CName with_mod_rel(std::string head, std::string relation, std::string arg) {
  CName c = oracle::noun(std::move(head));
  c.modifier = ModifierBlock{};
  c.modifier->mod_rel.push_back(ModRel{std::move(relation), {oracle::noun(std::move(arg))}, std::nullopt});
  return c;
}

template <class F>
std::string code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("NP golden set") {
  for (const auto& c : np_inputs::kGolden) {
    CAPTURE(c.expected);
    CHECK(generate_np(c.text, oracle::lexicon()).surface_utf8 == c.expected);
  }
}

TEST_CASE("participle NPs") {
  for (const auto& c : np_inputs::kParticiples) {
    CAPTURE(c.expected);
    CHECK(generate_np(c.text, oracle::lexicon()).surface_utf8 == c.expected);
  }
}

TEST_CASE("starred quantifier combinations are rejected") {
  for (const auto& c : np_inputs::kStarred) {
    CAPTURE(c.expected);
    auto np = parse_c_name(c.text);
    bool found = false;
    for (const auto& v : validate(np, oracle::lexicon())) found = found || v.rule == c.expected;
    CHECK(found);
    CHECK(code_of([&] { generate_np(np, oracle::lexicon()); }) == c.expected);
  }
  for (const auto& c : np_inputs::kStarredControls) {
    CHECK(generate_np(c.text, oracle::lexicon()).surface_utf8 == c.expected);
  }
}

TEST_CASE("case on the head") {
  CHECK(utf8(oracle::noun("elma", false, true), Case::acc) == "elmayı");
  CHECK(utf8(oracle::noun("ev", true), Case::loc) == "evlerde");
  CHECK(utf8(oracle::noun("kitab"), Case::abl) == "kitaptan");
}

TEST_CASE("modifying relations") {
  CHECK(utf8(with_mod_rel("kadIn", "with", "kalem")) == "kalemli kadın");
  CHECK(utf8(with_mod_rel("kadIn", "without", "kalem")) == "kalemsiz kadın");
  CHECK(utf8(with_mod_rel("ev", "made-of", "taS")) == "taştan ev");
  CHECK(code_of([&] { generate_np(with_mod_rel("ev", "sideways", "taS"), oracle::lexicon()); }) ==
        "UNKNOWN-RELATION");
}

TEST_CASE("possessor and demonstrative") {
  CName c = oracle::noun("kitab");
  c.possessor = Possessor{{oracle::noun("adam")}, false, false};
  CHECK(utf8(c) == "adamın kitabı");

  CName d = oracle::noun("masa");
  d.specifier = SpecifierBlock{};
  d.specifier->dem = {"bu"};
  CHECK(utf8(d) == "bu masa");
}

TEST_CASE("ordinal and measure") {
  CName c = oracle::noun("masa");
  c.modifier = ModifierBlock{};
  c.modifier->ordinal = Ordinal{3, "", false};
  CHECK(utf8(c) == "üçüncü masa");

  CName m = oracle::noun("elma");
  m.modifier = ModifierBlock{};
  m.modifier->quan_mod = MeasureQuantity{NumberQuantity{2}, oracle::noun("kilo"), false};
  CHECK(utf8(m) == "iki kilo elma");
}

TEST_CASE("conjoined NP") {
  CName c;
  c.conj_list = ConjList{"and", {oracle::noun("adam"), oracle::noun("kadIn")}};
  CHECK(utf8(c) == "adam ve kadın");
  CHECK(effective_agr(c).number == Number::plural);
}

TEST_CASE("head drop needs a dropped head") {
  CName c = oracle::noun("kitab");
  CHECK(code_of([&] { resolve_head_drop(c, OuterMarks{}, oracle::lexicon()); }) == "NOTHING-TO-SUBSTITUTE");
  CHECK(head_root(c) == "kitab");
  CHECK_FALSE(is_pro_drop(c));
}

TEST_CASE("plan exposes one task per word") {
  CName c = oracle::noun("masa");
  c.modifier = ModifierBlock{};
  c.modifier->qualitative.push_back(SProp{"bUyUk", std::nullopt});
  auto plan = realize_np(c, Case::dat, oracle::lexicon());
  auto tasks = plan.tasks();
  REQUIRE(tasks.size() == 2);
  CHECK(std::holds_alternative<SimpleTask>(tasks[0]));
  REQUIRE(std::holds_alternative<NominalTask>(tasks[1]));
  CHECK(std::get<NominalTask>(tasks[1]).case_ == Case::dat);
}
