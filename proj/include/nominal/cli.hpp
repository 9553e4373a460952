// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOMINAL_CLI_HPP
#define NOMINAL_CLI_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "nominal/atoms.hpp"
#include "nominal/lambda.hpp"
#include "nominal/permutation.hpp"

namespace nominal::cli {

using lambda::Term;

/// Bijection between source identifiers and names, scoped to one invocation.
///
/// Parsing interns identifiers in order of first appearance. Names created
/// later (fresh binders) get a generated label on first use: a..z, then
/// a1..z1, and so on, skipping labels already taken.
class SymbolTable {
 public:
  Name intern(std::string_view label);
  std::optional<Name> lookup(std::string_view label) const;
  const std::string& label(Name a);

 private:
  std::map<std::string, Name, std::less<>> by_label_;
  std::map<Name, std::string> by_name_;
  std::uint32_t next_index_ = 0;
  std::size_t next_generated_ = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Grammar:
///   term  ::= ('\' | 'λ') ident '.' term | atom+ [ lambda ]
///   atom  ::= ident | '(' term ')'
///   ident ::= [a-zA-Z_][a-zA-Z0-9_']*
/// Application is left-associative; a λ body extends as far right as
/// possible.
Term parse_term(std::string_view src, SymbolTable& symbols);

/// A sequence of parenthesized pairs, e.g. "(a b)(c d)", applied left to
/// right. The empty string is the identity.
Perm parse_perm(std::string_view src, SymbolTable& symbols);

/// A single identifier.
Name parse_name(std::string_view src, SymbolTable& symbols);

std::string print_term(const Term& t, SymbolTable& symbols);

// Commands --------------------------------------------------------------------

struct AlphaEq {
  Term lhs;
  Term rhs;
};
struct FreeVars {
  Term term;
};
struct Subst {
  Term term;
  Name name;
  Term replacement;
};
struct PermApply {
  Perm perm;
  Term term;
};
struct Fresh {
  Name name;
  Term term;
};
struct Normalize {
  Term term;
  std::size_t fuel = 1000;
};

using Command = std::variant<AlphaEq, FreeVars, Subst, PermApply, Fresh, Normalize>;

/// Exit codes: 0 affirmative or success, 1 negative verdict, 2 error.
enum ExitCode : int { kSuccess = 0, kNegative = 1, kError = 2 };

struct Outcome {
  std::string output;
  int exit_code = kSuccess;
};

/// Executes a parsed command. `symbols` must be the table the command's
/// terms were parsed with.
Outcome run(const Command& cmd, SymbolTable& symbols);

/// Full front end: argument parsing, execution, printing. Returns the exit
/// code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nominal::cli

#endif  // NOMINAL_CLI_HPP
