// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "np_inputs.hpp"
#include "oracles.hpp"
#include "tactgen/clause.hpp"
#include "tactgen/error.hpp"
#include "tactgen/golden.hpp"
#include "tactgen/morph.hpp"
#include "tactgen/pipeline.hpp"

using namespace tactgen;
using oracle::Label;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail.str("");
    pass = false;
    detail << why << "; ";
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string labels_text(const std::vector<Label>& ls) {
  std::string s;
  for (Label l : ls) s += std::string(s.empty() ? "" : " ") + std::string(to_string(l));
  return s;
}

std::optional<std::string> error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// 1. Golden corpus
Outcome golden_corpus() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto report = run_golden(TACTGEN_CORPUS_DIR, oracle::lexicon());
  if (report.cases.size() != 13) o.fail(std::to_string(report.cases.size()) + " corpus pairs found, expected 13");
  for (const auto& c : report.cases)
    if (!c.passed) o.fail(c.name + (c.error.empty() ? " differs:\n" + c.diff : " errored: " + c.error));
  const double secs = seconds_since(t0);
  if (secs >= 1.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail << report.cases.size() << "/13 byte-exact in " << secs << " s";
  return o;
}

// 2. Morphology pair
Outcome morphology_pair() {
  Outcome o;
  const std::pair<const char*, const char*> cases[] = {
      {"[[CAT=NOUN][ROOT=kalem][AGR=3SG][POSS=1SG][CASE=GEN]]", "kalemimin"},
      {"[[CAT=VERB][ROOT=gel][SENSE=POS][TAM1=PROG1][AGR=1SG]]", "geliyorum"},
  };
  for (const auto& [bundle, expected] : cases) {
    const auto b = MorphBundle::parse(bundle);
    const std::string got = apply_morphographemics(select_morphemes(b, oracle::lexicon()));
    if (got != expected) o.fail(std::string(bundle) + " gave " + got);
    else o.detail << expected << " ";
  }
  return o;
}

// 3. Information-structure placement
Outcome is_placement() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, Label>> roots{
      {"adam", Label::subject}, {"kitab", Label::dir_obj}, {"kadIn", Label::goal}, {"ver", Label::verb}};
  const std::vector<Label> present{Label::subject, Label::dir_obj, Label::goal};
  int valid = 0, duplicate = 0;
  for (const auto& a : oracle::all_assignments(present)) {
    CaseFrame cf = oracle::frame("ver", {{Label::subject, oracle::noun("adam")},
                                         {Label::dir_obj, oracle::noun("kitab", false, true)},
                                         {Label::goal, oracle::noun("kadIn")}});
    cf.is = InformationStructure{a.topic, a.focus, a.background};
    const auto cs = oracle::sentence(cf);
    if (!a.injective()) {
      ++duplicate;
      auto code = error_code([&] { generate(cs, oracle::lexicon()); });
      if (code != "IS-DUPLICATE") o.fail(a.describe() + " not rejected with IS-DUPLICATE");
      continue;
    }
    ++valid;
    try {
      const auto r = generate(cs, oracle::lexicon());
      const auto got = oracle::labels_in_output(r, roots);
      const auto want = oracle::placement(oracle::default_filter(present), a);
      if (got != want) o.fail(a.describe() + ": got " + labels_text(got) + ", oracle " + labels_text(want));
      if (a.topic && got.front() != *a.topic) o.fail(a.describe() + ": topic not first");
      const auto verb = std::find(got.begin(), got.end(), Label::verb) - got.begin();
      if (a.focus && (verb == 0 || got[verb - 1] != *a.focus)) o.fail(a.describe() + ": focus not preverbal");
      if (a.background && got.back() != *a.background) o.fail(a.describe() + ": background not postverbal");
    } catch (const Error& e) {
      o.fail(a.describe() + " threw " + e.what());
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 1.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass)
    o.detail << valid << " distinct assignments match the oracle, " << duplicate
             << " duplicate-label assignments rejected (" << secs << " s)";
  return o;
}

const std::vector<std::pair<std::string, Label>>& label_roots() {
  static const std::vector<std::pair<std::string, Label>> roots{
      {"adam", Label::subject},   {"gUn", Label::time},          {"ev", Label::place},
      {"kitab", Label::dir_obj},  {"kadIn", Label::beneficiary}, {"oda", Label::source},
      {"deniz", Label::goal},     {"masa", Label::location},     {"kalem", Label::instrument},
      {"elma", Label::value},     {"iskele", Label::path},       {"saat", Label::duration},
      {"karpuz", Label::manner},  {"ver", Label::verb}};
  return roots;
}

CaseFrame frame_with(const std::vector<Label>& labels, std::optional<bool> obj_definite = std::nullopt) {
  std::vector<std::pair<Label, CName>> cs;
  for (Label l : labels) {
    for (const auto& [root, label] : label_roots())
      if (label == l) cs.emplace_back(l, oracle::noun(root, false, l == Label::dir_obj ? obj_definite : std::nullopt));
  }
  return oracle::frame("ver", cs);
}

std::vector<Label> random_subset(std::mt19937& rng) {
  std::vector<Label> out;
  std::bernoulli_distribution coin(0.5);
  for (Label l : oracle::kPredicativeOrder)
    if (coin(rng)) out.push_back(l);
  return out;
}

// 4. Default order over random label subsets
Outcome default_order_property() {
  Outcome o;
  std::mt19937 rng(20240611);
  const int n = 2000;
  for (int i = 0; i < n; ++i) {
    auto present = random_subset(rng);
    std::shuffle(present.begin(), present.end(), rng);
    try {
      const auto r = generate(oracle::sentence(frame_with(present)), oracle::lexicon());
      auto got = oracle::labels_in_output(r, label_roots());
      if (got.empty() || got.back() != Label::verb) {
        o.fail("case " + std::to_string(i) + ": verb not last");
        continue;
      }
      got.pop_back();
      const auto want = oracle::default_filter(present);
      std::vector<Label> full(oracle::kPredicativeOrder.begin(), oracle::kPredicativeOrder.end());
      if (got != want || !oracle::is_subsequence(got, full))
        o.fail("case " + std::to_string(i) + ": got " + labels_text(got) + ", want " + labels_text(want));
    } catch (const Error& e) {
      o.fail("case " + std::to_string(i) + " threw " + e.what());
    }
  }
  if (o.pass) o.detail << n << " random subsets equal the default-order filter";
  return o;
}

// 5. Indefinite dir-obj stays preverbal; conflicting IS is an error
Outcome indefinite_object() {
  Outcome o;
  std::mt19937 rng(7);
  int accepted = 0, conflicts = 0;
  for (int i = 0; i < 1500; ++i) {
    auto present = random_subset(rng);
    if (std::find(present.begin(), present.end(), Label::dir_obj) == present.end()) present.push_back(Label::dir_obj);
    CaseFrame cf = frame_with(present, false);
    auto pick = [&]() -> std::optional<Label> {
      std::uniform_int_distribution<std::size_t> d(0, present.size() * 2);
      auto k = d(rng);
      if (k >= present.size()) return std::nullopt;
      return present[k];
    };
    oracle::Assignment a{pick(), pick(), pick()};
    if (!a.injective()) continue;
    cf.is = InformationStructure{a.topic, a.focus, a.background};
    const bool should_conflict = a.topic == Label::dir_obj || a.background == Label::dir_obj ||
                                 (a.focus && *a.focus != Label::dir_obj);
    try {
      const auto r = generate(oracle::sentence(cf), oracle::lexicon());
      ++accepted;
      const auto got = oracle::labels_in_output(r, label_roots());
      const auto verb = std::find(got.begin(), got.end(), Label::verb) - got.begin();
      if (verb == 0 || got[verb - 1] != Label::dir_obj) o.fail(a.describe() + ": dir-obj not preverbal");
      if (should_conflict) o.fail(a.describe() + ": expected IS-CONFLICT");
    } catch (const Error& e) {
      ++conflicts;
      if (e.code() != "IS-CONFLICT" || !should_conflict) o.fail(a.describe() + " threw " + e.what());
    }
  }
  // The named negative cases.
  const std::vector<std::pair<std::string, InformationStructure>> negatives{
      {"topic=dir-obj", {Label::dir_obj, {}, {}}},
      {"background=dir-obj", {{}, {}, Label::dir_obj}},
      {"focus=subject", {{}, Label::subject, {}}},
      {"focus=goal", {{}, Label::goal, {}}}};
  for (const auto& [name, is] : negatives) {
    CaseFrame cf = frame_with({Label::subject, Label::dir_obj, Label::goal}, false);
    cf.is = is;
    auto code = error_code([&] { generate(oracle::sentence(cf), oracle::lexicon()); });
    if (code != "IS-CONFLICT") o.fail(name + " was not rejected with IS-CONFLICT");
  }
  if (accepted == 0 || conflicts == 0) o.fail("sampling produced no accepted or no rejected inputs");
  if (o.pass)
    o.detail << accepted << " accepted outputs keep the indefinite dir-obj preverbal, " << conflicts + 4
             << " conflicting inputs raise IS-CONFLICT";
  return o;
}

// 6. Participle table conformance and example NPs
Outcome participle_table() {
  Outcome o;
  const auto rows = parse_participle_table(oracle::read_file(std::string(TACTGEN_DATA_DIR) + "/participles.tsv"));
  auto expected_form = [&](const ParticipleKey& k) -> std::string {
    for (const auto& r : rows) {
      if (r.role != to_string(k.role) || r.voice != to_string(k.voice) || r.tense != to_string(k.tense)) continue;
      if ((r.transitivity == "trans") != k.transitive) continue;
      if (r.subject == "spec" && k.subject_specific == false) continue;
      if (r.subject == "non-spec" && k.subject_specific != false) continue;
      return r.form;
    }
    return "-";
  };
  const GapRole roles[] = {GapRole::agent,       GapRole::patient, GapRole::theme,     GapRole::source,
                           GapRole::goal,        GapRole::location, GapRole::beneficiary, GapRole::c_obj,
                           GapRole::recipient,   GapRole::time,    GapRole::duration,  GapRole::place};
  int keys = 0;
  for (GapRole role : roles)
    for (Voice voice : {Voice::active, Voice::passive, Voice::causative})
      for (TenseClass tense : {TenseClass::past_present, TenseClass::future, TenseClass::past_narrative})
        for (bool trans : {true, false})
          for (std::optional<bool> spec : {std::optional<bool>{}, std::optional<bool>{true}, std::optional<bool>{false}}) {
            ParticipleKey k{role, voice, tense, trans, spec};
            ++keys;
            const std::string got = participle_form_label(select_participle(k));
            const std::string want = expected_form(k);
            if (got != want)
              o.fail(std::string(to_string(role)) + "/" + std::string(to_string(voice)) + "/" +
                     std::string(to_string(tense)) + (trans ? "/trans" : "/intrans") + ": got " + got + ", table " +
                     want);
          }
  for (const auto& c : np_inputs::kParticiples) {
    try {
      const auto r = generate_np(c.text, oracle::lexicon());
      if (r.surface_utf8 != c.expected) o.fail("NP gave '" + r.surface_utf8 + "', want '" + std::string(c.expected) + "'");
    } catch (const Error& e) {
      o.fail(std::string(c.expected) + " threw " + e.what());
    }
  }
  if (o.pass) o.detail << keys << " keys match " << rows.size() << " table rows; 3 example NPs exact";
  return o;
}

// 7. Vowel harmony over every metaform, and clean corpus tokens
Outcome harmony() {
  Outcome o;
  int checks = 0;
  for (char v : oracle::kVowels) {
    const std::string stem = std::string("k") + v + "t";
    for (const auto& [feature, metaform] : SuffixTable::builtin().entries()) {
      const std::string surface = apply_morphographemics(stem + "+" + metaform);
      const std::string got = oracle::vowels_of(surface).substr(1);
      const std::string want = oracle::harmony_vowels(v, metaform);
      ++checks;
      if (got != want) o.fail(stem + "+" + metaform + " -> " + surface + " (vowels " + got + ", oracle " + want + ")");
      if (oracle::has_metaphoneme(surface)) o.fail(stem + "+" + metaform + " left a metaphoneme: " + surface);
    }
  }
  int tokens = 0;
  for (auto name : oracle::kCorpusNames) {
    try {
      const auto r = generate(oracle::read_file(oracle::corpus_path(name, ".cf")), oracle::lexicon());
      for (const auto& t : r.tokens) {
        ++tokens;
        if (oracle::has_metaphoneme(t)) o.fail(std::string(name) + " token " + t + " keeps a metaphoneme");
      }
    } catch (const Error& e) {
      o.fail(std::string(name) + " threw " + e.what());
    }
  }
  if (o.pass) o.detail << checks << " vowel/metaform pairs match; " << tokens << " corpus tokens fully resolved";
  return o;
}

// 8. Starred examples are rejected
Outcome starred() {
  Outcome o;
  for (const auto& c : np_inputs::kStarred) {
    const CName np = parse_c_name(c.text);
    bool flagged = false;
    for (const auto& v : validate(np, oracle::lexicon())) flagged = flagged || v.rule == c.expected;
    if (!flagged) o.fail(std::string(c.expected) + " not reported");
    auto code = error_code([&] { generate_np(np, oracle::lexicon()); });
    if (code != c.expected) o.fail("generation of a " + std::string(c.expected) + " input was not refused");
  }
  for (const auto& c : np_inputs::kStarredControls) {
    try {
      const auto r = generate_np(c.text, oracle::lexicon());
      if (r.surface_utf8 != c.expected) o.fail("control gave '" + r.surface_utf8 + "'");
    } catch (const Error& e) {
      o.fail(std::string(c.expected) + " threw " + e.what());
    }
  }
  if (o.pass) o.detail << "5 starred inputs rejected, 3 grammatical controls generated";
  return o;
}

// 9. NP golden set
Outcome np_golden() {
  Outcome o;
  for (const auto& c : np_inputs::kGolden) {
    try {
      const auto r = generate_np(c.text, oracle::lexicon());
      if (r.surface_utf8 != c.expected) o.fail("got '" + r.surface_utf8 + "', want '" + std::string(c.expected) + "'");
      else o.detail << '"' << c.expected << "\" ";
    } catch (const Error& e) {
      o.fail(std::string(c.expected) + " threw " + e.what());
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"golden corpus reproduction", golden_corpus},
      {"morphology pair", morphology_pair},
      {"information-structure placement", is_placement},
      {"default-order property", default_order_property},
      {"indefinite-object invariant", indefinite_object},
      {"participle table conformance", participle_table},
      {"vowel harmony", harmony},
      {"starred-example rejection", starred},
      {"NP golden set", np_golden},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << name << " -- " << o.detail.str() << '\n';
  }
  return failures == 0 ? 0 : 1;
}
