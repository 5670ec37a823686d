#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tactgen/lexicon.hpp"

namespace tactgen {

struct GoldenCase {
  std::string name;
  bool passed = false;
  std::string diff;   // unified diff, expected vs. actual
  std::string error;  // generation error, if any
};

struct GoldenReport {
  std::vector<GoldenCase> cases;
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

// Rewrites ROOT=kitap to ROOT=kitab so either spelling of the stem compares equal.
std::string normalize_corpus_text(std::string_view text);

// Line-based unified diff; empty when the inputs are equal.
std::string unified_diff(std::string_view expected, std::string_view actual, std::string_view expected_name,
                         std::string_view actual_name, int context = 3);

// Generates every `<name>.cf` in `dir` and compares it with `<name>.out`.
GoldenReport run_golden(const std::filesystem::path& dir, const Lexicon& lex);

}  // namespace tactgen
