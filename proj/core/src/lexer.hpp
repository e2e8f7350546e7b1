#pragma once

// Tokenizer shared by the system parser and the atom parser.

#include <cstddef>
#include <string>
#include <string_view>

#include "apds/atom.hpp"
#include "apds/error.hpp"

namespace apds::detail {

inline bool is_token_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '#' ||
         c == '.' || c == '~';
}

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  /// Skips blanks and a trailing `#` comment (a `#` that does not continue a token).
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        pos_ = text_.size();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view s) {
    skip_space();
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }

  void expect(char c, std::string_view what) {
    if (!accept(c)) fail("expected " + std::string(what));
  }

  std::string token(std::string_view what) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_token_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected " + std::string(what));
    return std::string(text_.substr(start, pos_ - start));
  }

  /// `<id>:` where ids may themselves contain ':'; the last ':' of the run
  /// terminates the id.
  std::string rule_id() {
    skip_space();
    std::size_t start = pos_;
    std::size_t end = start;
    while (end < text_.size() && (is_token_char(text_[end]) || text_[end] == ':')) ++end;
    std::string_view run = text_.substr(start, end - start);
    std::size_t colon = run.rfind(':');
    if (colon == std::string_view::npos || colon == 0) fail("expected '<id>:' after 'rule'");
    pos_ = start + colon + 1;
    return std::string(run.substr(0, colon));
  }

  Atom atom() {
    Atom a;
    if (accept('!')) a.polarity = Polarity::Negative;
    a.state = StateSym::intern(token("state name"));
    expect('(', "'('");
    a.tail = Tail::Closed;
    bool saw_eps = false;
    while (!accept(')')) {
      if (at_end()) fail("unterminated atom, expected ')'");
      if (a.tail == Tail::Open) fail("the variable x must be the last argument");
      std::string sym = token("stack symbol, 'x' or 'eps'");
      if (sym == "eps") {
        if (!a.prefix.empty() || saw_eps) fail("'eps' must stand alone");
        saw_eps = true;
      } else if (sym == "x") {
        if (saw_eps) fail("'eps' must stand alone");
        a.tail = Tail::Open;
      } else {
        if (saw_eps) fail("'eps' must stand alone");
        a.prefix.push_back(StackSym::intern(sym));
      }
    }
    if (!saw_eps && a.prefix.empty() && a.tail == Tail::Closed) fail("empty argument list, write 'eps'");
    return a;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, pos_ + 1); }

  std::size_t column() const { return pos_ + 1; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace apds::detail
