// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOMINAL_FRESHNESS_HPP
#define NOMINAL_FRESHNESS_HPP

#include <stdexcept>
#include <string>

#include "nominal/atoms.hpp"
#include "nominal/nominal.hpp"
#include "nominal/permutation.hpp"

namespace nominal {

/// A witness handed to a universal freshness probe violated the probe's
/// precondition (it lies in the support, or is not fresh for a component).
class InvalidWitness : public std::invalid_argument {
 public:
  explicit InvalidWitness(Name witness, const std::string& reason)
      : std::invalid_argument("invalid witness " + to_string(witness) + ": " + reason),
        witness_(witness) {}

  Name witness() const noexcept { return witness_; }

 private:
  Name witness_;
};

/// Decides a # x: with b = fresh_for(support(x) ∪ {a}), checks (a b)•x ≡ x.
///
/// One witness is enough because any name outside the support gives the same
/// verdict; `fresh_universal_probe` exists to test exactly that.
template <class X>
bool fresh_dec(const NominalInstance<X>& inst, Name a, const X& x) {
  NameSet avoid = inst.support(x);
  avoid.insert(a);
  const Name b = fresh_for(avoid);
  return inst.equiv(inst.act(Perm::transposition(a, b), x), x);
}

/// Checks (a b)•x ≡ x for every b in `witnesses`. Each witness must lie
/// outside support(x); otherwise InvalidWitness is thrown.
template <class X>
bool fresh_universal_probe(const NominalInstance<X>& inst, Name a, const X& x,
                           const NameSet& witnesses) {
  const NameSet support = inst.support(x);
  for (Name b : witnesses)
    if (support.contains(b)) throw InvalidWitness(b, "in the support of the value");
  for (Name b : witnesses)
    if (!inst.equiv(inst.act(Perm::transposition(a, b), x), x)) return false;
  return true;
}

/// A value together with its nominal structure, for `fresh_tuple`.
template <class X>
struct Component {
  const NominalInstance<X>& inst;
  const X& value;
};

template <class X>
Component<X> component(const NominalInstance<X>& inst, const X& value) {
  return {inst, value};
}

/// a # (x1, ..., xn): conjunction of fresh_dec over the components.
template <class... Xs>
bool fresh_tuple([[maybe_unused]] Name a, const Component<Xs>&... parts) {
  return (fresh_dec(parts.inst, a, parts.value) && ...);
}

/// The names of support(x) that x actually depends on.
///
/// Coincides with the least support whenever that exists classically; in
/// general it is only guaranteed to be a subset of support(x).
template <class X>
NameSet minimize_support(const NominalInstance<X>& inst, const X& x) {
  NameSet out;
  for (Name a : inst.support(x))
    if (!fresh_dec(inst, a, x)) out.insert(a);
  return out;
}

}  // namespace nominal

#endif  // NOMINAL_FRESHNESS_HPP
