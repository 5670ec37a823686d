#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tactgen/caseframe.hpp"
#include "tactgen/lexicon.hpp"
#include "tactgen/morph.hpp"

namespace tactgen {

struct GenerateOptions {
  // Realize even when validation reports violations.
  bool force = false;
};

struct GenerationResult {
  std::vector<MorphBundle> bundles;
  std::vector<std::string> tokens;  // ASCII surface token per bundle
  std::string surface_ascii;
  std::string surface_utf8;
  std::vector<std::string> warnings;

  // `bundle --> token` lines, one per word, as in the corpus files.
  std::string corpus_format() const;
};

// Full pipeline from case-frame text to inflected words.
GenerationResult generate(std::string_view case_frame_text, const Lexicon& lex, const GenerateOptions& opts = {});
GenerationResult generate(const ComplexSentence& cs, const Lexicon& lex, const GenerateOptions& opts = {});

// Realizes a single noun phrase (no terminator).
GenerationResult generate_np(const CName& c, const Lexicon& lex, Case case_ = Case::nom,
                             const GenerateOptions& opts = {});
GenerationResult generate_np(std::string_view c_name_text, const Lexicon& lex, Case case_ = Case::nom,
                             const GenerateOptions& opts = {});

struct BatchItem {
  std::string name;
  bool ok = false;
  GenerationResult result;
  std::string error_code;
  std::string error_message;
};

// Generates each input independently; failures are recorded, not thrown.
std::vector<BatchItem> generate_batch(const std::vector<std::pair<std::string, std::string>>& inputs,
                                      const Lexicon& lex, const GenerateOptions& opts = {});

// Joins ASCII tokens into a sentence: commas and terminators attach to the
// preceding word. The UTF-8 variant capitalizes proper nouns and, when
// `sentence` is set, the first word.
std::string join_surface(const std::vector<MorphBundle>& bundles, const std::vector<std::string>& tokens,
                         const Lexicon& lex, Script script, bool sentence = true);

}  // namespace tactgen
