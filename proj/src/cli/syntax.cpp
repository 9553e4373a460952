// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <string>
#include <vector>

#include "nominal/cli.hpp"

namespace nominal::cli {

Name SymbolTable::intern(std::string_view label) {
  if (auto it = by_label_.find(label); it != by_label_.end()) return it->second;
  const Name a(next_index_++);
  by_label_.emplace(std::string(label), a);
  by_name_.emplace(a, std::string(label));
  return a;
}

std::optional<Name> SymbolTable::lookup(std::string_view label) const {
  if (auto it = by_label_.find(label); it != by_label_.end()) return it->second;
  return std::nullopt;
}

const std::string& SymbolTable::label(Name a) {
  if (auto it = by_name_.find(a); it != by_name_.end()) return it->second;
  std::string candidate;
  do {
    const std::size_t n = next_generated_++;
    candidate = std::string(1, static_cast<char>('a' + n % 26));
    if (n >= 26) candidate += std::to_string(n / 26);
  } while (by_label_.contains(candidate));
  by_label_.emplace(candidate, a);
  if (a.index() >= next_index_) next_index_ = a.index() + 1;
  return by_name_.emplace(a, std::move(candidate)).first->second;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, Lambda, Dot, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Ident:
      return "identifier '" + t.text + "'";
    case Tok::Lambda:
      return "'\\'";
    case Tok::Dot:
      return "'.'";
    case Tok::LParen:
      return "'('";
    case Tok::RParen:
      return "')'";
    case Tok::End:
      return "end of input";
  }
  return "?";
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view src) {
  constexpr std::string_view kLambdaUtf8 = "\xCE\xBB";
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
      continue;
    }
    const std::size_t start_col = column;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), line, start_col});
      column += j - i;
      i = j;
      continue;
    }
    if (src.substr(i, kLambdaUtf8.size()) == kLambdaUtf8) {
      out.push_back({Tok::Lambda, "λ", line, start_col});
      i += kLambdaUtf8.size();
      ++column;
      continue;
    }
    Tok kind;
    switch (c) {
      case '\\':
        kind = Tok::Lambda;
        break;
      case '.':
        kind = Tok::Dot;
        break;
      case '(':
        kind = Tok::LParen;
        break;
      case ')':
        kind = Tok::RParen;
        break;
      default:
        throw ParseError(line, start_col,
                         "unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({kind, std::string(1, c), line, start_col});
    ++column;
    ++i;
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, SymbolTable& symbols)
      : tokens_(tokenize(src)), symbols_(symbols) {}

  Term whole_term() {
    Term t = term();
    expect(Tok::End, "end of input");
    return t;
  }

  Perm whole_perm() {
    std::vector<Swap> word;
    while (peek().kind != Tok::End) {
      expect(Tok::LParen, "'(' opening a swap");
      const Name a = name();
      const Name b = name();
      expect(Tok::RParen, "')' closing a swap");
      word.push_back({a, b});
    }
    return Perm(std::move(word));
  }

  Name whole_name() {
    const Name a = name();
    expect(Tok::End, "end of input");
    return a;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, "expected " + expected + ", found " + describe(t));
  }

  void expect(Tok kind, const std::string& expected) {
    if (peek().kind != kind) fail(expected);
    ++pos_;
  }

  Name name() {
    if (peek().kind != Tok::Ident) fail("an identifier");
    return symbols_.intern(next().text);
  }

  Term lambda() {
    expect(Tok::Lambda, "'\\'");
    const Name binder = name();
    expect(Tok::Dot, "'.' after the bound name");
    return Term::lam(binder, term());
  }

  bool at_atom() const {
    return peek().kind == Tok::Ident || peek().kind == Tok::LParen;
  }

  Term atom() {
    if (peek().kind == Tok::Ident) return Term::var(name());
    if (peek().kind != Tok::LParen) fail("a term");
    ++pos_;
    Term t = term();
    expect(Tok::RParen, "')'");
    return t;
  }

  Term term() {
    if (peek().kind == Tok::Lambda) return lambda();
    Term t = atom();
    while (at_atom()) t = Term::app(std::move(t), atom());
    if (peek().kind == Tok::Lambda) t = Term::app(std::move(t), lambda());
    return t;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  SymbolTable& symbols_;
};

}  // namespace

Term parse_term(std::string_view src, SymbolTable& symbols) {
  return Parser(src, symbols).whole_term();
}

Perm parse_perm(std::string_view src, SymbolTable& symbols) {
  return Parser(src, symbols).whole_perm();
}

Name parse_name(std::string_view src, SymbolTable& symbols) {
  return Parser(src, symbols).whole_name();
}

std::string print_term(const Term& t, SymbolTable& symbols) {
  return lambda::render(t, [&](Name a) { return symbols.label(a); });
}

}  // namespace nominal::cli
