#pragma once

// Reference implementations and fixtures shared by the unit and acceptance
// tests. Nothing here calls into the code under test except to build inputs.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tactgen/caseframe.hpp"
#include "tactgen/lexicon.hpp"
#include "tactgen/pipeline.hpp"

namespace oracle {

using tactgen::Label;

const tactgen::Lexicon& lexicon();
std::string read_file(const std::string& path);
std::string corpus_path(std::string_view name, std::string_view ext);

inline constexpr std::array<std::string_view, 13> kCorpusNames{
    "ex1", "ex2", "ex3", "ex4", "ex5", "ex6", "ex7", "ex8", "ex9", "appc1", "appc2", "appc3", "appc4"};

// --- fixtures ---------------------------------------------------------------

tactgen::CName noun(std::string root, bool plural = false, std::optional<bool> definite = std::nullopt);
// A predicative past-tense frame; each label goes to arguments or adjuncts as appropriate.
tactgen::CaseFrame frame(std::string verb, const std::vector<std::pair<Label, tactgen::CName>>& constituents);
tactgen::ComplexSentence sentence(tactgen::CaseFrame cf);

// --- vowel harmony ------------------------------------------------------------

inline constexpr std::array<char, 8> kVowels{'a', 'e', 'I', 'i', 'o', 'O', 'u', 'U'};
bool is_vowel(char c);
// Vowels a metaform surfaces with after a stem whose last vowel is `stem_vowel`,
// resolving A by backness and H by backness and rounding.
std::string harmony_vowels(char stem_vowel, std::string_view metaform);
std::string vowels_of(std::string_view s);
// True when a surface token still contains an unresolved archiphoneme.
bool has_metaphoneme(std::string_view token);

// --- information structure ----------------------------------------------------

inline constexpr std::array<Label, 13> kPredicativeOrder{
    Label::subject, Label::time,     Label::place,    Label::dir_obj,    Label::beneficiary,
    Label::source,  Label::goal,     Label::location, Label::instrument, Label::value,
    Label::path,    Label::duration, Label::manner};

struct Assignment {
  std::optional<Label> topic, focus, background;
  bool injective() const;
  std::string describe() const;
};

// Every topic/focus/background choice over `labels`, each slot possibly absent.
std::vector<Assignment> all_assignments(const std::vector<Label>& labels);

// Brute-force placement: drop marked labels from the default sequence, then
// put topic first, focus right before the verb and background after it.
// The result includes Label::verb.
std::vector<Label> placement(const std::vector<Label>& default_sequence, const Assignment& a);

std::vector<Label> default_filter(const std::vector<Label>& present);
bool is_subsequence(const std::vector<Label>& needle, const std::vector<Label>& hay);

// Maps each bundle of a result to the label whose head root it carries;
// bundles with unknown roots (postpositions, punctuation) are skipped.
std::vector<Label> labels_in_output(const tactgen::GenerationResult& r,
                                    const std::vector<std::pair<std::string, Label>>& roots);

}  // namespace oracle
