#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tactgen {

// A parsed s-expression node. Strings keep their unquoted contents; atoms keep
// their literal spelling.
struct SExpr {
  enum class Kind { atom, string, list };

  Kind kind = Kind::list;
  std::string text;
  std::vector<SExpr> items;
  std::size_t line = 0;

  static SExpr atom(std::string s) { return SExpr{Kind::atom, std::move(s), {}, 0}; }
  static SExpr str(std::string s) { return SExpr{Kind::string, std::move(s), {}, 0}; }
  static SExpr list(std::vector<SExpr> xs = {}) { return SExpr{Kind::list, {}, std::move(xs), 0}; }

  bool is_list() const noexcept { return kind == Kind::list; }
  bool is_scalar() const noexcept { return kind != Kind::list; }
};

// Reads exactly one top-level form. `;` starts a comment that runs to the end
// of the line. Throws Error (SEXPR-UNBALANCED, SEXPR-EMPTY, SEXPR-TRAILING,
// SEXPR-STRING).
SExpr read_sexpr(std::string_view text);

// Renders a node with two-space indentation; scalars and short lists stay on
// one line.
std::string write_sexpr(const SExpr& node);

}  // namespace tactgen
