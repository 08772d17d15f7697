#ifndef QUADMONO_PARSE_HPP
#define QUADMONO_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "quadmono/error.hpp"
#include "quadmono/word.hpp"

namespace quadmono {

/// Reads words and relations written the way they are usually printed:
///
///   3 = 2 1 2 1^-1 2^-1
///   (a1 a2)^2 = (a2 a1)^2 = e
///   [a2, a3]
///
/// Names are identifiers or decimal numbers; "e" is the identity; "^k"
/// applies to the preceding name, group or commutator. A chain u = v = w
/// yields the relators u v^-1 and v w^-1.
class WordParser {
 public:
  /// With `add_unknown`, unseen names are appended to the symbol table.
  WordParser(SymbolTable& symbols, bool add_unknown, std::size_t line = 1)
      : symbols_(symbols), add_unknown_(add_unknown), line_(line) {}

  FreeWord word(std::string_view text) {
    reset(text);
    FreeWord w = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

  std::vector<FreeWord> relation(std::string_view text) {
    reset(text);
    std::vector<FreeWord> sides{expr()};
    skip();
    while (pos_ < text_.size() && text_[pos_] == '=') {
      ++pos_;
      sides.push_back(expr());
      skip();
    }
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    std::vector<FreeWord> rels;
    if (sides.size() == 1) return {sides[0]};
    for (std::size_t i = 0; i + 1 < sides.size(); ++i) rels.push_back(sides[i] * sides[i + 1].inverse());
    return rels;
  }

 private:
  void reset(std::string_view text) {
    text_ = text;
    pos_ = 0;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, pos_ + 1, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_term_start() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == '[' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  FreeWord expr() {
    FreeWord w;
    bool any = false;
    while (at_term_start()) {
      w *= term();
      any = true;
    }
    if (!any) fail("expected a word");
    return w;
  }

  int exponent() {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") fail("expected an integer exponent");
    try {
      return std::stoi(digits);
    } catch (const std::exception&) {
      fail("exponent out of range");
    }
  }

  FreeWord term() {
    FreeWord base = atom();
    return base.pow(exponent());
  }

  FreeWord atom() {
    skip();
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      FreeWord w = expr();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      FreeWord a = expr();
      expect(',');
      FreeWord b = expr();
      expect(']');
      return commutator(a, b);
    }
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    } else {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "e") return {};
    if (!symbols_.contains(name)) {
      if (!add_unknown_) {
        pos_ = start;
        fail("unknown generator '" + name + "'");
      }
      symbols_.add(name);
    }
    return FreeWord::generator(symbols_.lookup(name));
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  SymbolTable& symbols_;
  bool add_unknown_;
  std::size_t line_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

/// Parses a word over existing generator names.
inline FreeWord parse_word(std::string_view text, const SymbolTable& symbols) {
  SymbolTable copy = symbols;
  return WordParser(copy, false).word(text);
}

/// Parses "u = v [= w ...]" (or a bare relator) over existing generator names.
inline std::vector<FreeWord> parse_relation(std::string_view text, const SymbolTable& symbols) {
  SymbolTable copy = symbols;
  return WordParser(copy, false).relation(text);
}

}  // namespace quadmono

#endif  // QUADMONO_PARSE_HPP
