// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

// Shared test scaffolding: name shorthands, exhaustive term enumeration,
// random generators, and oracles that do not go through the library's own
// evaluation paths.

#ifndef NOMINAL_TESTS_FIXTURES_HPP
#define NOMINAL_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nominal/abstraction.hpp"
#include "nominal/atoms.hpp"
#include "nominal/lambda.hpp"
#include "nominal/nominal.hpp"
#include "nominal/permutation.hpp"
#include "nominal/sampling.hpp"

namespace nominal::testing {

using lambda::Term;

inline Name n(std::uint32_t i) { return Name(i); }

inline Term V(Name a) { return Term::var(a); }
inline Term A(Term f, Term x) { return Term::app(std::move(f), std::move(x)); }
inline Term L(Name a, Term body) { return Term::lam(a, std::move(body)); }

// Pools used by the exhaustive suites: free names x y z, binder names a b c.
// Variables range over all six, binders over the last three.
inline const std::vector<Name> kFreeNames{n(0), n(1), n(2)};
inline const std::vector<Name> kBinderNames{n(3), n(4), n(5)};
inline const std::vector<Name> kAllNames{n(0), n(1), n(2), n(3), n(4), n(5)};

/// by_size[k] holds every term with exactly k nodes, for k <= max_size.
inline std::vector<std::vector<Term>> enumerate_terms(std::size_t max_size,
                                                      const std::vector<Name>& vars,
                                                      const std::vector<Name>& binders) {
  std::vector<std::vector<Term>> by_size(max_size + 1);
  if (max_size == 0) return by_size;
  for (Name v : vars) by_size[1].push_back(Term::var(v));
  for (std::size_t k = 2; k <= max_size; ++k) {
    for (const Term& body : by_size[k - 1])
      for (Name b : binders) by_size[k].push_back(Term::lam(b, body));
    for (std::size_t left = 1; left + 1 < k; ++left) {
      const std::size_t right = k - 1 - left;
      for (const Term& f : by_size[left])
        for (const Term& x : by_size[right]) by_size[k].push_back(Term::app(f, x));
    }
  }
  return by_size;
}

inline std::vector<Term> flatten(const std::vector<std::vector<Term>>& by_size) {
  std::vector<Term> out;
  for (const auto& bucket : by_size) out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

inline std::vector<Term> all_terms_up_to(std::size_t max_size) {
  return flatten(enumerate_terms(max_size, kAllNames, kBinderNames));
}

/// Random term with exactly `size` nodes over names {n0 .. n(pool-1)}.
inline Term random_term(Rng& rng, std::size_t size, std::uint32_t pool) {
  if (size <= 1) return Term::var(sample_name(rng, pool));
  if (size == 2 || std::bernoulli_distribution(0.4)(rng))
    return Term::lam(sample_name(rng, pool), random_term(rng, size - 1, pool));
  const std::size_t left =
      std::uniform_int_distribution<std::size_t>(1, size - 2)(rng);
  return Term::app(random_term(rng, left, pool), random_term(rng, size - 1 - left, pool));
}

inline Generator<Term> term_generator(std::size_t min_size, std::size_t max_size,
                                      std::uint32_t pool = 6) {
  return [=](Rng& rng) {
    const std::size_t size =
        std::uniform_int_distribution<std::size_t>(min_size, max_size)(rng);
    return random_term(rng, size, pool);
  };
}

inline Generator<Name> name_generator(std::uint32_t pool = 6) {
  return [=](Rng& rng) { return sample_name(rng, pool); };
}

/// Renames one binder of `t` to a name not free in its body: an α-variant
/// built without the library's swap machinery.
inline Term rename_some_binder(const Term& t, Rng& rng, std::uint32_t pool);

namespace detail {

inline Term replace_free(const Term& t, Name from, Name to) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.name() == from ? Term::var(to) : t;
    case Term::Kind::App:
      return Term::app(replace_free(t.fun(), from, to), replace_free(t.arg(), from, to));
    case Term::Kind::Lam:
      break;
  }
  if (t.binder() == from) return t;
  return Term::lam(t.binder(), replace_free(t.body(), from, to));
}

// True when `to` would be captured by some binder if substituted for the
// free occurrences of `from` in t.
inline bool captured(const Term& t, Name from, Name to) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return false;
    case Term::Kind::App:
      return captured(t.fun(), from, to) || captured(t.arg(), from, to);
    case Term::Kind::Lam:
      break;
  }
  if (t.binder() == from) return false;
  if (t.binder() == to && lambda::fv(t.body()).contains(from)) return true;
  return captured(t.body(), from, to);
}

}  // namespace detail

inline Term rename_some_binder(const Term& t, Rng& rng, std::uint32_t pool) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t;
    case Term::Kind::App:
      if (std::bernoulli_distribution(0.5)(rng))
        return Term::app(rename_some_binder(t.fun(), rng, pool), t.arg());
      return Term::app(t.fun(), rename_some_binder(t.arg(), rng, pool));
    case Term::Kind::Lam:
      break;
  }
  if (std::bernoulli_distribution(0.5)(rng))
    return Term::lam(t.binder(), rename_some_binder(t.body(), rng, pool));
  const Name b = sample_name(rng, pool + 2);
  const Term& body = t.body();
  if (b != t.binder() &&
      (lambda::fv(body).contains(b) || detail::captured(body, t.binder(), b)))
    return t;
  return Term::lam(b, detail::replace_free(body, t.binder(), b));
}

/// Image of {n0 .. n(size-1)} under p, computed by composing transpositions
/// as slot exchanges in reverse word order (no left-to-right fold).
inline std::vector<std::uint32_t> dense_image(const Perm& p, std::uint32_t size) {
  std::vector<std::uint32_t> m(size);
  for (std::uint32_t i = 0; i < size; ++i) m[i] = i;
  const auto& word = p.swaps();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    std::swap(m[it->first.index()], m[it->second.index()]);
  return m;
}

}  // namespace nominal::testing

#endif  // NOMINAL_TESTS_FIXTURES_HPP
