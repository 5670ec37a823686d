#include "tactgen/sexpr.hpp"

#include "tactgen/error.hpp"

namespace tactgen {
namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  SExpr read_top() {
    skip_space();
    if (pos_ >= text_.size()) throw Error("SEXPR-EMPTY", "no s-expression found");
    SExpr node = read();
    skip_space();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')')
        throw Error("SEXPR-UNBALANCED", "unexpected ')' on line " + std::to_string(line_));
      throw Error("SEXPR-TRAILING", "extra input after the first form on line " + std::to_string(line_));
    }
    return node;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  SExpr read() {
    skip_space();
    if (pos_ >= text_.size())
      throw Error("SEXPR-UNBALANCED", "input ended inside a list (missing ')')");
    char c = text_[pos_];
    if (c == '(') {
      SExpr node = SExpr::list();
      node.line = line_;
      ++pos_;
      while (true) {
        skip_space();
        if (pos_ >= text_.size())
          throw Error("SEXPR-UNBALANCED", "list opened on line " + std::to_string(node.line) + " is never closed");
        if (text_[pos_] == ')') {
          ++pos_;
          return node;
        }
        node.items.push_back(read());
      }
    }
    if (c == ')') throw Error("SEXPR-UNBALANCED", "unexpected ')' on line " + std::to_string(line_));
    if (c == '"') {
      std::size_t start_line = line_;
      ++pos_;
      std::string s;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        if (text_[pos_] == '\n') ++line_;
        s.push_back(text_[pos_++]);
      }
      if (pos_ >= text_.size())
        throw Error("SEXPR-STRING", "unterminated string starting on line " + std::to_string(start_line));
      ++pos_;
      SExpr node = SExpr::str(std::move(s));
      node.line = start_line;
      return node;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (d == '(' || d == ')' || d == '"' || d == ';' || d == ' ' || d == '\t' || d == '\n' || d == '\r') break;
      ++pos_;
    }
    SExpr node = SExpr::atom(std::string(text_.substr(start, pos_ - start)));
    node.line = line_;
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

bool fits_on_line(const SExpr& node, std::size_t budget) {
  if (node.is_scalar()) return node.text.size() + 2 <= budget;
  std::size_t used = 2;
  for (const auto& item : node.items) {
    if (item.is_list()) return false;
    used += item.text.size() + 3;
    if (used > budget) return false;
  }
  return true;
}

void write(const SExpr& node, std::string& out, int indent) {
  switch (node.kind) {
    case SExpr::Kind::atom:
      out += node.text;
      return;
    case SExpr::Kind::string:
      out += '"';
      for (char c : node.text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      out += '"';
      return;
    case SExpr::Kind::list:
      break;
  }
  out += '(';
  if (fits_on_line(node, 72)) {
    for (std::size_t i = 0; i < node.items.size(); ++i) {
      if (i) out += ' ';
      write(node.items[i], out, indent + 1);
    }
    out += ')';
    return;
  }
  for (std::size_t i = 0; i < node.items.size(); ++i) {
    if (i) {
      out += '\n';
      out.append(static_cast<std::size_t>(indent + 1), ' ');
    }
    write(node.items[i], out, indent + 1);
  }
  out += ')';
}

}  // namespace

SExpr read_sexpr(std::string_view text) { return Reader(text).read_top(); }

std::string write_sexpr(const SExpr& node) {
  std::string out;
  write(node, out, 0);
  out += '\n';
  return out;
}

}  // namespace tactgen
