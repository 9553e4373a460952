// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOMINAL_PERMUTATION_HPP
#define NOMINAL_PERMUTATION_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "nominal/atoms.hpp"

namespace nominal {

/// The transposition (first second).
struct Swap {
  Name first;
  Name second;

  friend bool operator==(const Swap&, const Swap&) = default;
};

/// Exchanges `s.first` and `s.second`, fixes every other name.
constexpr Name swap_apply(Swap s, Name c) noexcept {
  if (s.first == c) return s.second;
  if (s.second == c) return s.first;
  return c;
}

/// A finite permutation written as a word of swaps, applied left to right.
///
/// Words are never normalized: `[(a a)]` and the empty word are different
/// values that denote the same bijection. Compare permutations with
/// `perm_equiv`, not by their words.
class Perm {
 public:
  Perm() = default;
  Perm(std::initializer_list<Swap> swaps) : swaps_(swaps) {}
  explicit Perm(std::vector<Swap> swaps) : swaps_(std::move(swaps)) {}

  static Perm transposition(Name a, Name b) { return Perm{{a, b}}; }

  Name operator()(Name a) const noexcept;

  const std::vector<Swap>& swaps() const noexcept { return swaps_; }
  std::size_t length() const noexcept { return swaps_.size(); }
  bool is_empty_word() const noexcept { return swaps_.empty(); }

 private:
  std::vector<Swap> swaps_;
};

inline Name perm_apply(const Perm& p, Name a) noexcept { return p(a); }

/// Word concatenation: the result applies `p` first, then `q`.
Perm compose(const Perm& p, const Perm& q);

/// Word reversal.
Perm inverse(const Perm& p);

/// Every name mentioned by some swap of `p`. Names outside are fixed by `p`;
/// the set may also contain fixed names, e.g. for the word [(a a)].
NameSet domain(const Perm& p);

/// Pointwise image { p(a) | a ∈ s }.
NameSet image(const Perm& p, const NameSet& s);

/// Extensional equality, decided on domain(p) ∪ domain(q).
bool perm_equiv(const Perm& p, const Perm& q);

std::string to_string(const Perm& p);

}  // namespace nominal

#endif  // NOMINAL_PERMUTATION_HPP
