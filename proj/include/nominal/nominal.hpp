// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOMINAL_NOMINAL_HPP
#define NOMINAL_NOMINAL_HPP

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nominal/atoms.hpp"
#include "nominal/permutation.hpp"
#include "nominal/sampling.hpp"

namespace nominal {

/// A nominal structure on the carrier X, given as a record of functions.
///
/// The record is a contract, not a proof. Every instance must satisfy:
///
///   * `equiv` is an equivalence relation;
///   * gact_id:      equiv(act(ε, x), x);
///   * gact_compat:  equiv(act(p, act(q, x)), act(compose(q, p), x));
///   * gact_proper:  perm_equiv(p, q) && equiv(x, y)
///                     implies equiv(act(p, x), act(q, y));
///   * support_spec: a, b ∉ support(x) implies equiv(act((a b), x), x).
///
/// `support` returns *some* finite support, an upper bound of the least one.
/// Use `minimize_support` (freshness.hpp) to shrink it.
///
/// Defining a new carrier follows five steps: write the action, write the
/// support function, pick the equivalence, then run `check_laws` with a
/// generator for the carrier in place of the two instance proofs. Note that
/// gact_proper is only ever exercised with the decidable `perm_equiv`; if a
/// carrier's action can tell apart words that `perm_equiv` identifies, that
/// is a bug in the carrier.
template <class X>
struct NominalInstance {
  std::function<bool(const X&, const X&)> equiv;
  std::function<X(const Perm&, const X&)> act;
  std::function<NameSet(const X&)> support;
  /// Optional rendering used in law-check counterexamples.
  std::function<std::string(const X&)> show;
};

template <class X>
std::string describe(const NominalInstance<X>& inst, const X& x) {
  return inst.show ? inst.show(x) : std::string("<value>");
}

// Instances -----------------------------------------------------------------

inline NominalInstance<Name> instance_name() {
  return {
      [](Name a, Name b) { return a == b; },
      [](const Perm& p, Name a) { return p(a); },
      [](Name a) { return NameSet{a}; },
      [](Name a) { return to_string(a); },
  };
}

/// Trivial nominal structure: permutations act as the identity and every
/// value is supported by the empty set.
template <std::equality_comparable T>
NominalInstance<T> instance_trivial() {
  return {
      [](const T& x, const T& y) { return x == y; },
      [](const Perm&, const T& x) { return x; },
      [](const T&) { return NameSet{}; },
      [](const T& x) -> std::string {
        if constexpr (std::same_as<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (requires(std::ostream& os) { os << x; }) {
          std::ostringstream os;
          os << x;
          return os.str();
        } else {
          return "<trivial>";
        }
      },
  };
}

inline NominalInstance<bool> instance_bool() { return instance_trivial<bool>(); }
inline NominalInstance<std::monostate> instance_unit() {
  return instance_trivial<std::monostate>();
}

template <class X, class Y>
NominalInstance<std::pair<X, Y>> instance_pair(NominalInstance<X> ix,
                                               NominalInstance<Y> iy) {
  using P = std::pair<X, Y>;
  return {
      [ix, iy](const P& u, const P& v) {
        return ix.equiv(u.first, v.first) && iy.equiv(u.second, v.second);
      },
      [ix, iy](const Perm& p, const P& u) {
        return P(ix.act(p, u.first), iy.act(p, u.second));
      },
      [ix, iy](const P& u) { return ix.support(u.first) | iy.support(u.second); },
      [ix, iy](const P& u) {
        return "(" + describe(ix, u.first) + ", " + describe(iy, u.second) + ")";
      },
  };
}

template <class X, class Y>
NominalInstance<std::variant<X, Y>> instance_sum(NominalInstance<X> ix,
                                                 NominalInstance<Y> iy) {
  using S = std::variant<X, Y>;
  return {
      [ix, iy](const S& u, const S& v) {
        if (u.index() != v.index()) return false;
        if (u.index() == 0) return ix.equiv(std::get<0>(u), std::get<0>(v));
        return iy.equiv(std::get<1>(u), std::get<1>(v));
      },
      [ix, iy](const Perm& p, const S& u) {
        if (u.index() == 0) return S(std::in_place_index<0>, ix.act(p, std::get<0>(u)));
        return S(std::in_place_index<1>, iy.act(p, std::get<1>(u)));
      },
      [ix, iy](const S& u) {
        return u.index() == 0 ? ix.support(std::get<0>(u)) : iy.support(std::get<1>(u));
      },
      [ix, iy](const S& u) {
        return u.index() == 0 ? "inl " + describe(ix, std::get<0>(u))
                              : "inr " + describe(iy, std::get<1>(u));
      },
  };
}

template <class X>
NominalInstance<std::optional<X>> instance_option(NominalInstance<X> ix) {
  using O = std::optional<X>;
  return {
      [ix](const O& u, const O& v) {
        if (u.has_value() != v.has_value()) return false;
        return !u.has_value() || ix.equiv(*u, *v);
      },
      [ix](const Perm& p, const O& u) { return u ? O(ix.act(p, *u)) : O(); },
      [ix](const O& u) { return u ? ix.support(*u) : NameSet{}; },
      [ix](const O& u) { return u ? "some " + describe(ix, *u) : std::string("none"); },
  };
}

template <class X>
NominalInstance<std::vector<X>> instance_list(NominalInstance<X> ix) {
  using L = std::vector<X>;
  return {
      [ix](const L& u, const L& v) {
        if (u.size() != v.size()) return false;
        for (std::size_t i = 0; i < u.size(); ++i)
          if (!ix.equiv(u[i], v[i])) return false;
        return true;
      },
      [ix](const Perm& p, const L& u) {
        L out;
        out.reserve(u.size());
        for (const X& x : u) out.push_back(ix.act(p, x));
        return out;
      },
      [ix](const L& u) {
        NameSet s;
        for (const X& x : u) s |= ix.support(x);
        return s;
      },
      [ix](const L& u) {
        std::string out = "[";
        for (std::size_t i = 0; i < u.size(); ++i)
          out += (i ? ", " : "") + describe(ix, u[i]);
        return out + "]";
      },
  };
}

/// Name sets act elementwise and support themselves.
inline NominalInstance<NameSet> instance_nameset() {
  return {
      [](const NameSet& s, const NameSet& t) { return s == t; },
      [](const Perm& p, const NameSet& s) { return image(p, s); },
      [](const NameSet& s) { return s; },
      [](const NameSet& s) { return to_string(s); },
  };
}

// Law checking --------------------------------------------------------------

struct LawConfig {
  std::size_t trials = 1000;
  std::uint64_t seed = 0x6e6f6d696e616cULL;
  /// Names are drawn from {n0 .. n(pool-1)}.
  std::uint32_t pool = 6;
  std::size_t max_swaps = 5;
};

struct LawOutcome {
  LawOutcome() = default;
  explicit LawOutcome(std::string name) : law(std::move(name)) {}

  std::string law;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Rendering of the first failing case, empty when the law held.
  std::string counterexample;

  bool passed() const noexcept { return failures == 0; }
};

struct LawReport {
  std::vector<LawOutcome> outcomes;

  bool passed() const noexcept {
    for (const auto& o : outcomes)
      if (!o.passed()) return false;
    return true;
  }

  /// The outcome for `law`; throws std::out_of_range for unknown laws.
  const LawOutcome& at(std::string_view law) const;

  std::string summary() const;
};

/// Produces a value expected to be `equiv` to its argument.
template <class X>
using Variation = std::function<X(const X&, Rng&)>;

namespace detail {

inline void record(LawOutcome& o, bool ok, const std::function<std::string()>& why) {
  ++o.cases;
  if (ok) return;
  if (o.failures++ == 0) o.counterexample = why();
}

}  // namespace detail

/// Randomized check of the equivalence laws, gact_id, gact_compat,
/// gact_proper and support_spec.
///
/// Equivalent pairs for the symmetry, transitivity and gact_proper checks
/// come from `vary` when given, otherwise from swapping two names outside
/// the support (which must give an equivalent value by support_spec).
template <class X>
LawReport check_laws(const NominalInstance<X>& inst, const Generator<X>& gen,
                     const LawConfig& cfg = {}, const Variation<X>& vary = {}) {
  Rng rng(cfg.seed);
  LawOutcome equivalence{"equivalence"};
  LawOutcome gact_id{"gact_id"};
  LawOutcome gact_compat{"gact_compat"};
  LawOutcome gact_proper{"gact_proper"};
  LawOutcome support_spec{"support_spec"};

  auto variant_of = [&](const X& x) -> X {
    if (vary) return vary(x, rng);
    const auto [a, b] = sample_pair_outside(rng, inst.support(x), cfg.pool);
    return inst.act(Perm::transposition(a, b), x);
  };
  auto show = [&](const X& x) { return describe(inst, x); };

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const X x = gen(rng);
    const X other = gen(rng);
    const X y = variant_of(x);
    const X z = variant_of(y);

    detail::record(equivalence, inst.equiv(x, x),
                   [&] { return "not reflexive at " + show(x); });
    detail::record(equivalence, inst.equiv(x, other) == inst.equiv(other, x), [&] {
      return "not symmetric at " + show(x) + " / " + show(other);
    });
    detail::record(equivalence, inst.equiv(x, y) == inst.equiv(y, x), [&] {
      return "not symmetric at " + show(x) + " / " + show(y);
    });
    detail::record(equivalence,
                   !(inst.equiv(x, y) && inst.equiv(y, z)) || inst.equiv(x, z), [&] {
                     return "not transitive at " + show(x) + " / " + show(y) + " / " +
                            show(z);
                   });

    detail::record(gact_id, inst.equiv(inst.act(Perm{}, x), x),
                   [&] { return "ε • x differs from x = " + show(x); });

    const Perm p = sample_perm(rng, cfg.pool, cfg.max_swaps);
    const Perm q = sample_perm(rng, cfg.pool, cfg.max_swaps);
    detail::record(gact_compat,
                   inst.equiv(inst.act(p, inst.act(q, x)), inst.act(compose(q, p), x)),
                   [&] {
                     return "p = " + to_string(p) + ", q = " + to_string(q) +
                            ", x = " + show(x);
                   });

    const Perm p2 = sample_equivalent_perm(rng, p, cfg.pool);
    const X& x2 = inst.equiv(x, y) ? y : x;
    detail::record(gact_proper, inst.equiv(inst.act(p, x), inst.act(p2, x2)), [&] {
      return "p = " + to_string(p) + ", p' = " + to_string(p2) + ", x = " + show(x) +
             ", x' = " + show(x2);
    });

    const auto [a, b] = sample_pair_outside(rng, inst.support(x), cfg.pool);
    detail::record(support_spec,
                   inst.equiv(inst.act(Perm::transposition(a, b), x), x), [&] {
                     return "(" + to_string(a) + " " + to_string(b) +
                            ") moves x = " + show(x) + " with support " +
                            to_string(inst.support(x));
                   });
  }

  return LawReport{{equivalence, gact_id, gact_compat, gact_proper, support_spec}};
}

}  // namespace nominal

#endif  // NOMINAL_NOMINAL_HPP
