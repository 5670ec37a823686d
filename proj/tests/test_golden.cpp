#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "oracles.hpp"
#include "tactgen/error.hpp"
#include "tactgen/golden.hpp"

using namespace tactgen;
namespace fs = std::filesystem;

TEST_CASE("normalization") {
  CHECK(normalize_corpus_text("[[CAT=NOUN][ROOT=kitap][AGR=3SG]]") == "[[CAT=NOUN][ROOT=kitab][AGR=3SG]]");
  CHECK(normalize_corpus_text("[[ROOT=kitapCI]]") == "[[ROOT=kitapCI]]");
}

TEST_CASE("unified diff") {
  CHECK(unified_diff("a\nb\n", "a\nb\n", "x", "y").empty());
  auto d = unified_diff("a\nb\nc\n", "a\nB\nc\n", "expected", "actual");
  CHECK(d.find("--- expected") != std::string::npos);
  CHECK(d.find("+++ actual") != std::string::npos);
  CHECK(d.find("@@ -1,3 +1,3 @@") != std::string::npos);
  CHECK(d.find("\n-b\n+B\n") != std::string::npos);
}

TEST_CASE("distant changes form separate hunks") {
  std::string a, b;
  for (int i = 0; i < 20; ++i) {
    a += std::to_string(i) + "\n";
    b += (i == 1 || i == 18 ? "x" : std::to_string(i)) + "\n";
  }
  auto d = unified_diff(a, b, "a", "b");
  std::size_t hunks = 0;
  for (auto p = d.find("@@ "); p != std::string::npos; p = d.find("@@ ", p + 3)) ++hunks;
  CHECK(hunks == 2);
}

TEST_CASE("golden runner") {
  auto report = run_golden(TACTGEN_CORPUS_DIR, oracle::lexicon());
  CHECK(report.cases.size() == oracle::kCorpusNames.size());
  CHECK(report.ok());

  auto dir = fs::temp_directory_path() / "tactgen_golden_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  CHECK(run_golden(dir, oracle::lexicon()).cases.empty());

  fs::copy_file(oracle::corpus_path("ex1", ".cf"), dir / "ex1.cf");
  CHECK_THROWS_AS(run_golden(dir, oracle::lexicon()), Error);

  {
    std::ofstream out(dir / "ex1.out");
    out << "[PERIOD] --> .\n";
  }
  auto bad = run_golden(dir, oracle::lexicon());
  REQUIRE(bad.cases.size() == 1);
  CHECK_FALSE(bad.cases[0].passed);
  CHECK_FALSE(bad.cases[0].diff.empty());
  CHECK(bad.failures() == 1);
  fs::remove_all(dir);

  CHECK_THROWS_AS(run_golden(TACTGEN_CORPUS_DIR "/ex1.cf", oracle::lexicon()), Error);
}
