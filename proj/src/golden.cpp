#include "tactgen/golden.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tactgen/error.hpp"
#include "tactgen/pipeline.hpp"

namespace tactgen {

std::size_t GoldenReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const GoldenCase& c) { return !c.passed; }));
}

std::string normalize_corpus_text(std::string_view text) {
  std::string s(text);
  static constexpr std::string_view from = "ROOT=kitap]";
  for (std::size_t p = s.find(from); p != std::string::npos; p = s.find(from, p + 1)) s[p + 9] = 'b';
  return s;
}

namespace {

std::vector<std::string> split_lines(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t end = s.find('\n', start);
    if (end == std::string_view::npos) end = s.size();
    out.emplace_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("IO", "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Edit {
  char op;  // ' ', '-', '+'
  std::size_t a, b;
};

std::vector<Edit> lcs_script(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<std::size_t>> len(n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = m; j-- > 0;)
      len[i][j] = a[i] == b[j] ? len[i + 1][j + 1] + 1 : std::max(len[i + 1][j], len[i][j + 1]);
  std::vector<Edit> out;
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[i] == b[j]) {
      out.push_back({' ', i++, j++});
    } else if (j < m && (i == n || len[i][j + 1] >= len[i + 1][j])) {
      out.push_back({'+', i, j++});
    } else {
      out.push_back({'-', i++, j});
    }
  }
  return out;
}

}  // namespace

std::string unified_diff(std::string_view expected, std::string_view actual, std::string_view expected_name,
                         std::string_view actual_name, int context) {
  if (expected == actual) return {};
  const auto a = split_lines(expected);
  const auto b = split_lines(actual);
  const auto script = lcs_script(a, b);

  std::ostringstream out;
  out << "--- " << expected_name << "\n+++ " << actual_name << "\n";
  const auto ctx = static_cast<std::size_t>(std::max(context, 0));
  std::size_t k = 0;
  while (k < script.size()) {
    while (k < script.size() && script[k].op == ' ') ++k;
    if (k == script.size()) break;
    std::size_t begin = k >= ctx ? k - ctx : 0;
    std::size_t end = k;
    // Extend the hunk while changes are closer than twice the context.
    for (std::size_t q = k; q < script.size(); ++q) {
      if (script[q].op != ' ') end = q + 1;
      else if (q - end >= 2 * ctx) break;
    }
    end = std::min(script.size(), end + ctx);
    std::size_t a_count = 0, b_count = 0;
    for (std::size_t q = begin; q < end; ++q) {
      if (script[q].op != '+') ++a_count;
      if (script[q].op != '-') ++b_count;
    }
    out << "@@ -" << script[begin].a + (a_count ? 1 : 0) << ',' << a_count << " +" << script[begin].b + (b_count ? 1 : 0)
        << ',' << b_count << " @@\n";
    for (std::size_t q = begin; q < end;) {
      if (script[q].op == ' ') {
        out << ' ' << a[script[q].a] << '\n';
        ++q;
        continue;
      }
      std::size_t run_end = q;
      while (run_end < end && script[run_end].op != ' ') ++run_end;
      for (std::size_t r = q; r < run_end; ++r)
        if (script[r].op == '-') out << '-' << a[script[r].a] << '\n';
      for (std::size_t r = q; r < run_end; ++r)
        if (script[r].op == '+') out << '+' << b[script[r].b] << '\n';
      q = run_end;
    }
    k = end;
  }
  if (a == b) out << "(line endings differ)\n";
  return out.str();
}

GoldenReport run_golden(const std::filesystem::path& dir, const Lexicon& lex) {
  if (!std::filesystem::is_directory(dir)) throw Error("IO", "not a directory: " + dir.string());
  std::vector<std::filesystem::path> inputs;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".cf") inputs.push_back(entry.path());
  std::sort(inputs.begin(), inputs.end());

  GoldenReport report;
  for (const auto& cf : inputs) {
    GoldenCase gc;
    gc.name = cf.stem().string();
    auto out_path = cf;
    out_path.replace_extension(".out");
    const std::string expected = normalize_corpus_text(read_file(out_path));
    try {
      const std::string actual = normalize_corpus_text(generate(read_file(cf), lex).corpus_format());
      gc.diff = unified_diff(expected, actual, out_path.filename().string(), gc.name + " (generated)");
      gc.passed = gc.diff.empty();
    } catch (const Error& e) {
      gc.error = e.what();
    }
    report.cases.push_back(std::move(gc));
  }
  return report;
}

}  // namespace tactgen
