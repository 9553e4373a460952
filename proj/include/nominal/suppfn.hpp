// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOMINAL_SUPPFN_HPP
#define NOMINAL_SUPPFN_HPP

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nominal/abstraction.hpp"
#include "nominal/atoms.hpp"
#include "nominal/freshness.hpp"
#include "nominal/nominal.hpp"
#include "nominal/permutation.hpp"
#include "nominal/sampling.hpp"

namespace nominal {

/// A function bundled with a declared finite support.
///
/// The caller owes two obligations that nothing here enforces:
///   * properness: x ≡ x' implies carrier(x) ≡ carrier(x');
///   * supp_spec: for a, b ∉ supp and all x,
///       (a b)•carrier((a b)•x) ≡ carrier(x).
/// `check_proper` and `check_supp_spec` sample them. The carrier must be pure.
template <class X, class Y>
struct SuppFn {
  std::function<Y(const X&)> carrier;
  NameSet supp;

  Y operator()(const X& x) const { return carrier(x); }
};

template <class X, class Y>
Y apply(const SuppFn<X, Y>& f, const X& x) {
  return f.carrier(x);
}

template <class X>
SuppFn<X, X> identity_fn() {
  return {[](const X& x) { return x; }, NameSet{}};
}

template <class X, class Y>
SuppFn<X, Y> constant_fn(const NominalInstance<Y>& iy, Y value) {
  NameSet s = iy.support(value);
  return {[value = std::move(value)](const X&) { return value; }, std::move(s)};
}

/// Conjugation: (p • F)(x) = p • F(p⁻¹ • x), supported by p's image of supp.
template <class X, class Y>
SuppFn<X, Y> fn_act(const NominalInstance<X>& ix, const NominalInstance<Y>& iy,
                    const Perm& p, const SuppFn<X, Y>& f) {
  return {
      [ix, iy, p, p_inv = inverse(p), car = f.carrier](const X& x) {
        return iy.act(p, car(ix.act(p_inv, x)));
      },
      image(p, f.supp),
  };
}

/// Pointwise agreement on a finite probe. Full extensional equality of
/// functions is not decidable, so this is the only equality on offer.
template <class X, class Y>
bool fn_equiv_probe(const NominalInstance<Y>& iy, const SuppFn<X, Y>& f,
                    const SuppFn<X, Y>& g, std::span<const X> probe) {
  for (const X& x : probe)
    if (!iy.equiv(f(x), g(x))) return false;
  return true;
}

/// g ∘ f, supported by the union of both supports. The union can be larger
/// than the least support of the composite.
template <class X, class Y, class Z>
SuppFn<X, Z> compose(const SuppFn<X, Y>& f, const SuppFn<Y, Z>& g) {
  return {[fc = f.carrier, gc = g.carrier](const X& x) { return gc(fc(x)); },
          f.supp | g.supp};
}

/// Nominal structure on supported functions: conjugation action, declared
/// support, and pointwise equality on `probe`.
template <class X, class Y>
NominalInstance<SuppFn<X, Y>> instance_suppfn(NominalInstance<X> ix,
                                              NominalInstance<Y> iy,
                                              std::vector<X> probe) {
  using F = SuppFn<X, Y>;
  return {
      [iy, probe](const F& f, const F& g) {
        return fn_equiv_probe<X, Y>(iy, f, g, probe);
      },
      [ix, iy](const Perm& p, const F& f) { return fn_act(ix, iy, p, f); },
      [](const F& f) { return f.supp; },
      [](const F& f) { return "fn supported by " + to_string(f.supp); },
  };
}

// Freshness theorem ---------------------------------------------------------

/// h applied to the canonical name fresh for its support.
///
/// When some a with a ∉ supp(h) satisfies a # h(a) (see check_fresh_hyp),
/// every such a gives h(a) ≡ fresh_f(h). The function is total either way.
template <class X>
X fresh_f(const SuppFn<Name, X>& h) {
  return h(fresh_for(h.supp));
}

/// With a = fresh_for(supp(h)), decides a # h(a).
template <class X>
bool check_fresh_hyp(const NominalInstance<X>& ix, const SuppFn<Name, X>& h) {
  const Name a = fresh_for(h.supp);
  return fresh_dec(ix, a, h(a));
}

// Freshness condition for binders -------------------------------------------

/// Lifts f : Name × X → Y to abstractions.
///
/// For [a]x the lifted function evaluates fresh_f of
///   h(c) = f(c, (a c)•x),  supp(h) = {a} ∪ support(x) ∪ supp(f),
/// so the bound name is replaced by a name fresh for everything in sight.
/// When f satisfies the binder freshness condition (check_fcb), the result
/// respects ≈α and agrees with f(a, x) for every a ∉ supp(f).
template <class X, class Y>
SuppFn<Abstraction<X>, Y> fcb_lift(const NominalInstance<X>& ix,
                                   const SuppFn<std::pair<Name, X>, Y>& f) {
  return {
      [ix, f](const Abstraction<X>& abs) {
        NameSet h_supp = ix.support(abs.term) | f.supp;
        h_supp.insert(abs.name);
        const SuppFn<Name, Y> h{
            [&](Name c) {
              return f(std::pair<Name, X>(
                  c, ix.act(Perm::transposition(abs.name, c), abs.term)));
            },
            std::move(h_supp),
        };
        return fresh_f(h);
      },
      f.supp,
  };
}

/// With a = fresh_for(supp(f)), checks a # f(a, x) for `cfg.trials` sampled x.
/// The condition quantifies over all of X; sampling only approximates it.
template <class X, class Y>
bool check_fcb(const NominalInstance<Y>& iy, const SuppFn<std::pair<Name, X>, Y>& f,
               const Generator<X>& gen, const LawConfig& cfg = {}) {
  Rng rng(cfg.seed);
  const Name a = fresh_for(f.supp);
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    if (!fresh_dec(iy, a, f(std::pair<Name, X>(a, gen(rng))))) return false;
  }
  return true;
}

/// Samples a, b ∉ supp(f) and x, checking (a b)•f((a b)•x) ≡ f(x).
template <class X, class Y>
LawOutcome check_supp_spec(const NominalInstance<X>& ix, const NominalInstance<Y>& iy,
                           const SuppFn<X, Y>& f, const Generator<X>& gen,
                           const LawConfig& cfg = {}) {
  Rng rng(cfg.seed);
  LawOutcome out{"supp_spec"};
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const X x = gen(rng);
    const auto [a, b] = sample_pair_outside(rng, f.supp, cfg.pool);
    const Perm ab = Perm::transposition(a, b);
    detail::record(out, iy.equiv(iy.act(ab, f(ix.act(ab, x))), f(x)), [&] {
      return "(" + to_string(a) + " " + to_string(b) + ") at x = " + describe(ix, x);
    });
  }
  return out;
}

/// Samples x and an equivalent x' (two names outside support(x) swapped, or
/// `vary` when given), checking f(x) ≡ f(x').
template <class X, class Y>
LawOutcome check_proper(const NominalInstance<X>& ix, const NominalInstance<Y>& iy,
                        const SuppFn<X, Y>& f, const Generator<X>& gen,
                        const LawConfig& cfg = {}, const Variation<X>& vary = {}) {
  Rng rng(cfg.seed);
  LawOutcome out{"properness"};
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    const X x = gen(rng);
    X x2 = x;
    if (vary) {
      x2 = vary(x, rng);
    } else {
      const auto [a, b] = sample_pair_outside(rng, ix.support(x), cfg.pool);
      x2 = ix.act(Perm::transposition(a, b), x);
    }
    if (!ix.equiv(x, x2)) continue;
    detail::record(out, iy.equiv(f(x), f(x2)), [&] {
      return "x = " + describe(ix, x) + ", x' = " + describe(ix, x2);
    });
  }
  return out;
}

}  // namespace nominal

#endif  // NOMINAL_SUPPFN_HPP
