// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>
#include <vector>

#include "nominal/cli.hpp"
#include "nominal/freshness.hpp"

namespace nominal::cli {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

Outcome verdict(bool holds) {
  return {holds ? "true" : "false", holds ? kSuccess : kNegative};
}

}  // namespace

Outcome run(const Command& cmd, SymbolTable& symbols) {
  return std::visit(
      Overloaded{
          [](const AlphaEq& c) { return verdict(lambda::alpha_eq(c.lhs, c.rhs)); },
          [&](const FreeVars& c) {
            std::vector<std::string> labels;
            for (Name a : lambda::fv(c.term)) labels.push_back(symbols.label(a));
            std::sort(labels.begin(), labels.end());
            std::string out;
            for (const auto& l : labels) out += (out.empty() ? "" : " ") + l;
            return Outcome{out, kSuccess};
          },
          [&](const Subst& c) {
            return Outcome{
                print_term(lambda::subst(c.term, c.name, c.replacement), symbols),
                kSuccess};
          },
          [&](const PermApply& c) {
            return Outcome{print_term(lambda::term_act(c.perm, c.term), symbols),
                           kSuccess};
          },
          [](const Fresh& c) {
            return verdict(fresh_dec(lambda::term_instance(), c.name, c.term));
          },
          [&](const Normalize& c) {
            const auto result = lambda::normalize(c.term, c.fuel);
            std::string out = print_term(result.term, symbols) + "\n";
            if (!result.normal_form) return Outcome{out + "fuel-exhausted", kNegative};
            return Outcome{out + "steps=" + std::to_string(result.steps), kSuccess};
          },
      },
      cmd);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Queries on untyped lambda terms up to alpha-equivalence.", "nominal"};
  app.require_subcommand(1, 1);

  std::string t1, t2, name, perm;
  std::size_t fuel = 1000;

  auto* alphaeq = app.add_subcommand("alphaeq", "Decide alpha-equivalence of two terms");
  alphaeq->add_option("lhs", t1, "First term")->required();
  alphaeq->add_option("rhs", t2, "Second term")->required();

  auto* fv = app.add_subcommand("fv", "Print the free variables of a term");
  fv->add_option("term", t1, "Term")->required();

  auto* subst = app.add_subcommand("subst", "Capture-avoiding term[name := replacement]");
  subst->add_option("term", t1, "Term")->required();
  subst->add_option("name", name, "Variable to replace")->required();
  subst->add_option("replacement", t2, "Replacement term")->required();

  auto* perm_cmd = app.add_subcommand("perm", "Apply a permutation like \"(a b)(c d)\"");
  perm_cmd->add_option("perm", perm, "Permutation")->required();
  perm_cmd->add_option("term", t1, "Term")->required();

  auto* fresh = app.add_subcommand("fresh", "Decide whether a name is fresh for a term");
  fresh->add_option("name", name, "Name")->required();
  fresh->add_option("term", t1, "Term")->required();

  auto* normalize = app.add_subcommand("normalize", "Leftmost-outermost beta normalization");
  normalize->add_option("term", t1, "Term")->required();
  normalize->add_option("--fuel", fuel, "Maximum number of beta steps")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  SymbolTable symbols;
  try {
    Command cmd = [&]() -> Command {
      if (*alphaeq) {
        Term lhs = parse_term(t1, symbols);
        return AlphaEq{lhs, parse_term(t2, symbols)};
      }
      if (*fv) return FreeVars{parse_term(t1, symbols)};
      if (*subst) {
        Term t = parse_term(t1, symbols);
        const Name a = parse_name(name, symbols);
        return Subst{t, a, parse_term(t2, symbols)};
      }
      if (*perm_cmd) {
        Perm p = parse_perm(perm, symbols);
        return PermApply{p, parse_term(t1, symbols)};
      }
      if (*fresh) {
        const Name a = parse_name(name, symbols);
        return Fresh{a, parse_term(t1, symbols)};
      }
      return Normalize{parse_term(t1, symbols), fuel};
    }();
    const Outcome result = run(cmd, symbols);
    out << result.output << "\n";
    return result.exit_code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
}

}  // namespace nominal::cli
