// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOMINAL_ABSTRACTION_HPP
#define NOMINAL_ABSTRACTION_HPP

#include "nominal/atoms.hpp"
#include "nominal/freshness.hpp"
#include "nominal/nominal.hpp"
#include "nominal/permutation.hpp"

namespace nominal {

/// The name abstraction [name]term. A plain record: all identification up to
/// renaming happens in `alpha_equiv_dec`, so two abstractions must never be
/// compared field by field.
template <class X>
struct Abstraction {
  Name name;
  X term;
};

template <class X>
Abstraction<X> abstract(Name a, X x) {
  return Abstraction<X>{a, std::move(x)};
}

/// [a]x ≈α [b]y, decided with the single witness
/// c = fresh_for({a, b} ∪ support(x) ∪ support(y)): (c a)•x ≡ (c b)•y.
template <class X>
bool alpha_equiv_dec(const NominalInstance<X>& inst, const Abstraction<X>& lhs,
                     const Abstraction<X>& rhs) {
  NameSet avoid = inst.support(lhs.term) | inst.support(rhs.term);
  avoid.insert(lhs.name);
  avoid.insert(rhs.name);
  const Name c = fresh_for(avoid);
  return inst.equiv(inst.act(Perm::transposition(c, lhs.name), lhs.term),
                    inst.act(Perm::transposition(c, rhs.name), rhs.term));
}

/// Checks (c a)•x ≡ (c b)•y for every witness c. Each witness must be fresh
/// for a, b, x and y; otherwise InvalidWitness is thrown.
template <class X>
bool alpha_universal_probe(const NominalInstance<X>& inst, const Abstraction<X>& lhs,
                           const Abstraction<X>& rhs, const NameSet& witnesses) {
  const auto names = instance_name();
  for (Name c : witnesses) {
    if (!fresh_tuple(c, component(names, lhs.name), component(names, rhs.name),
                     component(inst, lhs.term), component(inst, rhs.term)))
      throw InvalidWitness(c, "not fresh for both abstractions");
  }
  for (Name c : witnesses) {
    if (!inst.equiv(inst.act(Perm::transposition(c, lhs.name), lhs.term),
                    inst.act(Perm::transposition(c, rhs.name), rhs.term)))
      return false;
  }
  return true;
}

/// p • [a]x = [p(a)](p • x).
template <class X>
Abstraction<X> abs_act(const NominalInstance<X>& inst, const Perm& p,
                       const Abstraction<X>& abs) {
  return Abstraction<X>{p(abs.name), inst.act(p, abs.term)};
}

/// support(x) \ {a}.
template <class X>
NameSet abs_support(const NominalInstance<X>& inst, const Abstraction<X>& abs) {
  NameSet s = inst.support(abs.term);
  s.erase(abs.name);
  return s;
}

template <class X>
NominalInstance<Abstraction<X>> instance_abstraction(NominalInstance<X> inst) {
  using A = Abstraction<X>;
  return {
      [inst](const A& u, const A& v) { return alpha_equiv_dec(inst, u, v); },
      [inst](const Perm& p, const A& u) { return abs_act(inst, p, u); },
      [inst](const A& u) { return abs_support(inst, u); },
      [inst](const A& u) { return "[" + to_string(u.name) + "]" + describe(inst, u.term); },
  };
}

}  // namespace nominal

#endif  // NOMINAL_ABSTRACTION_HPP
