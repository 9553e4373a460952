// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#include "nominal/lambda.hpp"

#include <vector>

namespace nominal::lambda {

struct Term::Node {
  Kind kind;
  Name name;
  Term first;
  Term second;
  NameSet fv;
  std::size_t size;
};

Term Term::var(Name a) {
  return Term(std::make_shared<const Node>(
      Node{Kind::Var, a, Term(nullptr), Term(nullptr), NameSet{a}, 1}));
}

Term Term::app(Term fun, Term arg) {
  NameSet free = fun.free_names() | arg.free_names();
  const std::size_t size = 1 + fun.size() + arg.size();
  return Term(std::make_shared<const Node>(
      Node{Kind::App, Name(0), std::move(fun), std::move(arg), std::move(free), size}));
}

Term Term::lam(Name binder, Term body) {
  NameSet free = body.free_names();
  free.erase(binder);
  const std::size_t size = 1 + body.size();
  return Term(std::make_shared<const Node>(
      Node{Kind::Lam, binder, std::move(body), Term(nullptr), std::move(free), size}));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }
Name Term::name() const noexcept { return node_->name; }
const Term& Term::fun() const noexcept { return node_->first; }
const Term& Term::arg() const noexcept { return node_->second; }
const Term& Term::body() const noexcept { return node_->first; }
const NameSet& Term::free_names() const noexcept { return node_->fv; }
std::size_t Term::size() const noexcept { return node_->size; }

bool operator==(const Term& lhs, const Term& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  if (lhs.kind() != rhs.kind() || lhs.size() != rhs.size()) return false;
  switch (lhs.kind()) {
    case Term::Kind::Var:
      return lhs.name() == rhs.name();
    case Term::Kind::App:
      return lhs.fun() == rhs.fun() && lhs.arg() == rhs.arg();
    case Term::Kind::Lam:
      return lhs.binder() == rhs.binder() && lhs.body() == rhs.body();
  }
  return false;
}

Term term_act(const Perm& p, const Term& t) {
  if (p.is_empty_word()) return t;
  switch (t.kind()) {
    case Term::Kind::Var:
      return Term::var(p(t.name()));
    case Term::Kind::App:
      return Term::app(term_act(p, t.fun()), term_act(p, t.arg()));
    case Term::Kind::Lam:
      break;
  }
  return Term::lam(p(t.binder()), term_act(p, t.body()));
}

const NameSet& fv(const Term& t) { return t.free_names(); }

NameSet all_names(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return NameSet{t.name()};
    case Term::Kind::App:
      return all_names(t.fun()) | all_names(t.arg());
    case Term::Kind::Lam:
      break;
  }
  NameSet s = all_names(t.body());
  s.insert(t.binder());
  return s;
}

bool alpha_eq(const Term& t, const Term& u) {
  if (t == u) return true;
  // Size and free names are invariant under ≈α and cached per node.
  if (t.kind() != u.kind() || t.size() != u.size() || t.free_names() != u.free_names())
    return false;
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.name() == u.name();
    case Term::Kind::App:
      return alpha_eq(t.fun(), u.fun()) && alpha_eq(t.arg(), u.arg());
    case Term::Kind::Lam:
      break;
  }
  return alpha_equiv_dec(term_instance(), Abstraction<Term>{t.binder(), t.body()},
                         Abstraction<Term>{u.binder(), u.body()});
}

const NominalInstance<Term>& term_instance() {
  static const NominalInstance<Term> instance{
      [](const Term& t, const Term& u) { return alpha_eq(t, u); },
      [](const Perm& p, const Term& t) { return term_act(p, t); },
      [](const Term& t) { return t.free_names(); },
      [](const Term& t) { return to_string(t); },
  };
  return instance;
}

Term subst(const Term& t, Name a, const Term& u) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.name() == a ? u : t;
    case Term::Kind::App:
      return Term::app(subst(t.fun(), a, u), subst(t.arg(), a, u));
    case Term::Kind::Lam:
      break;
  }
  const Name b = t.binder();
  NameSet avoid = t.body().free_names() | u.free_names();
  avoid.insert(a);
  avoid.insert(b);
  const Name c = fresh_for(avoid);
  return Term::lam(c, subst(term_act(Perm::transposition(b, c), t.body()), a, u));
}

std::optional<Term> beta_step(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return std::nullopt;
    case Term::Kind::Lam:
      if (auto body = beta_step(t.body())) return Term::lam(t.binder(), *body);
      return std::nullopt;
    case Term::Kind::App:
      break;
  }
  if (t.fun().is_lam()) return subst(t.fun().body(), t.fun().binder(), t.arg());
  if (auto fun = beta_step(t.fun())) return Term::app(*fun, t.arg());
  if (auto arg = beta_step(t.arg())) return Term::app(t.fun(), *arg);
  return std::nullopt;
}

Normalized normalize(const Term& t, std::size_t fuel) {
  Normalized out{t};
  while (true) {
    auto next = beta_step(out.term);
    if (!next) {
      out.normal_form = true;
      return out;
    }
    if (out.steps == fuel) return out;
    out.term = std::move(*next);
    ++out.steps;
  }
}

namespace {

// `tail` is true when nothing follows the term in its context, so a λ there
// can extend to the end without parentheses.
void render_into(std::string& out, const Term& t, const NameLabel& label, bool tail) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out += label(t.name());
      return;
    case Term::Kind::Lam:
      if (!tail) out += '(';
      out += '\\';
      out += label(t.binder());
      out += ". ";
      render_into(out, t.body(), label, true);
      if (!tail) out += ')';
      return;
    case Term::Kind::App:
      break;
  }
  render_into(out, t.fun(), label, false);
  out += ' ';
  if (t.arg().is_app()) {
    out += '(';
    render_into(out, t.arg(), label, true);
    out += ')';
  } else {
    render_into(out, t.arg(), label, tail);
  }
}

}  // namespace

std::string render(const Term& t, const NameLabel& label) {
  std::string out;
  render_into(out, t, label, true);
  return out;
}

std::string to_string(const Term& t) {
  return render(t, [](Name a) { return nominal::to_string(a); });
}

// De Bruijn -------------------------------------------------------------------

struct DbTerm::Node {
  Kind kind;
  std::uint32_t index;
  Name name;
  DbTerm first;
  DbTerm second;
};

DbTerm DbTerm::bound(std::uint32_t index) {
  return DbTerm(std::make_shared<const Node>(
      Node{Kind::Bound, index, Name(0), DbTerm(nullptr), DbTerm(nullptr)}));
}

DbTerm DbTerm::free(Name a) {
  return DbTerm(std::make_shared<const Node>(
      Node{Kind::Free, 0, a, DbTerm(nullptr), DbTerm(nullptr)}));
}

DbTerm DbTerm::app(DbTerm fun, DbTerm arg) {
  return DbTerm(std::make_shared<const Node>(
      Node{Kind::App, 0, Name(0), std::move(fun), std::move(arg)}));
}

DbTerm DbTerm::lam(DbTerm body) {
  return DbTerm(std::make_shared<const Node>(
      Node{Kind::Lam, 0, Name(0), std::move(body), DbTerm(nullptr)}));
}

DbTerm::Kind DbTerm::kind() const noexcept { return node_->kind; }
std::uint32_t DbTerm::index() const noexcept { return node_->index; }
Name DbTerm::name() const noexcept { return node_->name; }
const DbTerm& DbTerm::fun() const noexcept { return node_->first; }
const DbTerm& DbTerm::arg() const noexcept { return node_->second; }
const DbTerm& DbTerm::body() const noexcept { return node_->first; }

bool operator==(const DbTerm& lhs, const DbTerm& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  if (lhs.kind() != rhs.kind()) return false;
  switch (lhs.kind()) {
    case DbTerm::Kind::Bound:
      return lhs.index() == rhs.index();
    case DbTerm::Kind::Free:
      return lhs.name() == rhs.name();
    case DbTerm::Kind::App:
      return lhs.fun() == rhs.fun() && lhs.arg() == rhs.arg();
    case DbTerm::Kind::Lam:
      return lhs.body() == rhs.body();
  }
  return false;
}

namespace {

DbTerm to_debruijn(const Term& t, std::vector<Name>& scope) {
  switch (t.kind()) {
    case Term::Kind::Var:
      for (std::size_t depth = 0; depth < scope.size(); ++depth) {
        if (scope[scope.size() - 1 - depth] == t.name())
          return DbTerm::bound(static_cast<std::uint32_t>(depth));
      }
      return DbTerm::free(t.name());
    case Term::Kind::App: {
      DbTerm fun = to_debruijn(t.fun(), scope);
      return DbTerm::app(std::move(fun), to_debruijn(t.arg(), scope));
    }
    case Term::Kind::Lam:
      break;
  }
  scope.push_back(t.binder());
  DbTerm body = to_debruijn(t.body(), scope);
  scope.pop_back();
  return DbTerm::lam(std::move(body));
}

void db_string(std::string& out, const DbTerm& t) {
  switch (t.kind()) {
    case DbTerm::Kind::Bound:
      out += std::to_string(t.index());
      return;
    case DbTerm::Kind::Free:
      out += 'f';
      out += std::to_string(t.name().index());
      return;
    case DbTerm::Kind::App:
      out += "A(";
      db_string(out, t.fun());
      out += ',';
      db_string(out, t.arg());
      out += ')';
      return;
    case DbTerm::Kind::Lam:
      out += "L(";
      db_string(out, t.body());
      out += ')';
      return;
  }
}

}  // namespace

DbTerm to_debruijn(const Term& t) {
  std::vector<Name> scope;
  return to_debruijn(t, scope);
}

std::string to_string(const DbTerm& t) {
  std::string out;
  db_string(out, t);
  return out;
}

}  // namespace nominal::lambda
