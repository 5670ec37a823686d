#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "tactgen/caseframe.hpp"
#include "tactgen/error.hpp"
#include "tactgen/golden.hpp"
#include "tactgen/pipeline.hpp"

#ifndef TACTGEN_DATA_DIR
#define TACTGEN_DATA_DIR "data"
#endif

namespace {

enum class Format { corpus, surface_ascii, surface_utf8, bundles };

enum Exit { kOk = 0, kFailed = 1, kViolations = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  ss << in.rdbuf();
  return ss.str();
}

void print(const tactgen::GenerationResult& r, Format f) {
  switch (f) {
    case Format::corpus: std::cout << r.corpus_format(); break;
    case Format::surface_ascii: std::cout << r.surface_ascii << '\n'; break;
    case Format::surface_utf8: std::cout << r.surface_utf8 << '\n'; break;
    case Format::bundles:
      for (const auto& b : r.bundles) std::cout << b.format() << '\n';
      break;
  }
}

int run_golden(const std::string& dir, const tactgen::Lexicon& lex) {
  const auto report = tactgen::run_golden(dir, lex);
  if (report.cases.empty()) {
    std::cout << "0 cases\n";
    return kOk;
  }
  for (const auto& c : report.cases) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
    if (!c.error.empty()) std::cout << "  error: " << c.error << '\n';
    std::cout << c.diff;
  }
  std::cout << report.cases.size() - report.failures() << '/' << report.cases.size() << " cases passed\n";
  return report.ok() ? kOk : kFailed;
}

int validate_files(const std::vector<std::string>& inputs, const tactgen::Lexicon& lex) {
  int status = kOk;
  for (const auto& path : inputs) {
    try {
      auto parsed = tactgen::parse_case_frame_detailed(read_input(path));
      for (const auto& w : parsed.warnings) std::cerr << path << ": warning: " << w << '\n';
      auto violations = tactgen::validate(parsed.sentence, lex);
      for (const auto& v : violations) std::cout << path << ": " << v.rule << " at " << v.path << ": " << v.message << '\n';
      if (!violations.empty()) status = std::max(status, static_cast<int>(kViolations));
    } catch (const tactgen::Error& e) {
      std::cerr << path << ": " << e.what() << '\n';
      status = std::max(status, static_cast<int>(kFailed));
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turkish sentence generator: case frames in, inflected words out"};
  std::vector<std::string> inputs;
  Format format = Format::corpus;
  std::string lexicon_path;
  bool validate_only = false;
  bool force = false;
  std::string golden_dir;

  const std::map<std::string, Format> formats{{"corpus", Format::corpus},
                                              {"surface-ascii", Format::surface_ascii},
                                              {"surface-utf8", Format::surface_utf8},
                                              {"bundles", Format::bundles}};
  app.add_option("inputs", inputs, "Case-frame files ('-' reads standard input)");
  auto* fmt = app.add_option("--format", format, "Output format")
                  ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--lexicon", lexicon_path, "Lexicon file")->envname("TACTGEN_LEXICON");
  app.add_flag("--validate-only", validate_only, "Report violations without generating")->excludes(fmt);
  app.add_flag("--force", force, "Generate even when validation reports violations");
  app.add_option("--golden", golden_dir, "Run the golden corpus in this directory");
  CLI11_PARSE(app, argc, argv);

  if (lexicon_path.empty()) lexicon_path = std::string(TACTGEN_DATA_DIR) + "/lexicon.tsv";

  try {
    tactgen::Lexicon lex;
    try {
      lex = tactgen::Lexicon::load_file(lexicon_path);
    } catch (const tactgen::Error& e) {
      if (e.code() == "IO") throw IoError(e.what());
      throw;
    }

    if (!golden_dir.empty()) return run_golden(golden_dir, lex);
    if (inputs.empty()) inputs.push_back("-");
    if (validate_only) return validate_files(inputs, lex);

    tactgen::GenerateOptions opts;
    opts.force = force;
    int status = kOk;
    for (const auto& path : inputs) {
      const std::string text = read_input(path);
      try {
        auto r = tactgen::generate(text, lex, opts);
        for (const auto& w : r.warnings) std::cerr << path << ": warning: " << w << '\n';
        print(r, format);
      } catch (const tactgen::Error& e) {
        std::cerr << path << ": " << e.what() << '\n';
        status = kFailed;
      }
    }
    return status;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const tactgen::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == "IO" ? kIo : kFailed;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
}
