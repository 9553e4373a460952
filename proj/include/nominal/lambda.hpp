// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOMINAL_LAMBDA_HPP
#define NOMINAL_LAMBDA_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "nominal/abstraction.hpp"
#include "nominal/atoms.hpp"
#include "nominal/nominal.hpp"
#include "nominal/permutation.hpp"
#include "nominal/suppfn.hpp"

namespace nominal::lambda {

/// Untyped λ-term with named binders. Immutable; subterms are shared.
///
/// Each node caches its free names and its size, so `fv` is O(1).
class Term {
 public:
  enum class Kind : std::uint8_t { Var, App, Lam };

  static Term var(Name a);
  static Term app(Term fun, Term arg);
  static Term lam(Name binder, Term body);

  Kind kind() const noexcept;
  bool is_var() const noexcept { return kind() == Kind::Var; }
  bool is_app() const noexcept { return kind() == Kind::App; }
  bool is_lam() const noexcept { return kind() == Kind::Lam; }

  /// The variable of a Var, or the binder of a Lam.
  Name name() const noexcept;
  Name binder() const noexcept { return name(); }
  const Term& fun() const noexcept;
  const Term& arg() const noexcept;
  const Term& body() const noexcept;

  const NameSet& free_names() const noexcept;
  /// Number of Var, App and Lam nodes.
  std::size_t size() const noexcept;

  /// Syntactic identity, binder names included. Use alpha_eq for ≈α.
  friend bool operator==(const Term& lhs, const Term& rhs);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Renames every occurrence, binders and free variables alike.
Term term_act(const Perm& p, const Term& t);

/// Free variables; the support of a term up to ≈α.
const NameSet& fv(const Term& t);

/// Every name occurring in the term, binders included.
NameSet all_names(const Term& t);

/// Decides t ≈α u. Binders are compared through name abstraction:
/// λa.s ≈α λb.r iff [a]s ≈α [b]r.
bool alpha_eq(const Term& t, const Term& u);

/// Terms up to ≈α: equiv = alpha_eq, act = term_act, support = fv.
const NominalInstance<Term>& term_instance();

/// Capture-avoiding t[a := u]. The binder of every λ on the way down is
/// renamed to fresh_for(fv(body) ∪ fv(u) ∪ {a, binder}), whether or not a
/// capture would occur.
Term subst(const Term& t, Name a, const Term& u);

/// Contracts the leftmost-outermost redex, if any.
std::optional<Term> beta_step(const Term& t);

struct Normalized {
  Term term;
  std::size_t steps = 0;
  /// False when fuel ran out before a normal form was reached.
  bool normal_form = false;
};

Normalized normalize(const Term& t, std::size_t fuel);

using NameLabel = std::function<std::string(Name)>;

/// Concrete syntax with minimal parentheses: `\x. body`, application by
/// juxtaposition. Names are rendered through `label`.
std::string render(const Term& t, const NameLabel& label);

/// render() over raw indices, e.g. "\n0. n0 n1".
std::string to_string(const Term& t);

// De Bruijn oracle ------------------------------------------------------------

/// Locally nameless form: bound occurrences become indices, free ones keep
/// their name. Two terms are α-equivalent iff their images are identical.
class DbTerm {
 public:
  enum class Kind : std::uint8_t { Bound, Free, App, Lam };

  static DbTerm bound(std::uint32_t index);
  static DbTerm free(Name a);
  static DbTerm app(DbTerm fun, DbTerm arg);
  static DbTerm lam(DbTerm body);

  Kind kind() const noexcept;
  std::uint32_t index() const noexcept;
  Name name() const noexcept;
  const DbTerm& fun() const noexcept;
  const DbTerm& arg() const noexcept;
  const DbTerm& body() const noexcept;

  friend bool operator==(const DbTerm& lhs, const DbTerm& rhs);

 private:
  struct Node;
  explicit DbTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

DbTerm to_debruijn(const Term& t);

/// Compact rendering, usable as a hash key: "L(A(0,f3))".
std::string to_string(const DbTerm& t);

// α-structural recursion -----------------------------------------------------

/// The function r on terms with
///   r(a)      = var_case(a)
///   r(s t)    = app_case(r(s), r(t))
///   r(λa.s)   = fcb_lift(lam_case)([c] r((a c)•s)),  c = fresh_for(supp ∪ fv(s) ∪ {a})
/// supported by the union `supp` of the three supports.
///
/// When a ∉ supp the Lam case is equivalent to fcb_lift(lam_case)([a] r(s)).
/// The renaming matters otherwise: r(s) may mention a through supp, and
/// abstracting over it would rename that occurrence too.
///
/// The result respects ≈α provided all three cases satisfy supp_spec and
/// lam_case satisfies the binder freshness condition (check_fcb).
template <class Y>
SuppFn<Term, Y> alpha_rec(const NominalInstance<Y>& iy, const SuppFn<Name, Y>& var_case,
                          const SuppFn<std::pair<Y, Y>, Y>& app_case,
                          const SuppFn<std::pair<Name, Y>, Y>& lam_case) {
  struct Recursor {
    SuppFn<Name, Y> var_case;
    SuppFn<std::pair<Y, Y>, Y> app_case;
    SuppFn<Abstraction<Y>, Y> lam_case;
    NameSet supp;

    Y operator()(const Term& t) const {
      switch (t.kind()) {
        case Term::Kind::Var:
          return var_case(t.name());
        case Term::Kind::App:
          return app_case(std::pair<Y, Y>((*this)(t.fun()), (*this)(t.arg())));
        case Term::Kind::Lam:
          break;
      }
      const Name a = t.binder();
      NameSet avoid = supp | t.body().free_names();
      avoid.insert(a);
      const Name c = fresh_for(avoid);
      const Term body = term_act(Perm::transposition(a, c), t.body());
      return lam_case(Abstraction<Y>{c, (*this)(body)});
    }
  };

  NameSet supp = var_case.supp | app_case.supp | lam_case.supp;
  auto rec = std::make_shared<const Recursor>(
      Recursor{var_case, app_case, fcb_lift(iy, lam_case), supp});
  return {[rec](const Term& t) { return (*rec)(t); }, std::move(supp)};
}

}  // namespace nominal::lambda

#endif  // NOMINAL_LAMBDA_HPP
