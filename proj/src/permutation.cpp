// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#include "nominal/permutation.hpp"

#include <algorithm>

namespace nominal {

Name Perm::operator()(Name a) const noexcept {
  for (const Swap& s : swaps_) a = swap_apply(s, a);
  return a;
}

Perm compose(const Perm& p, const Perm& q) {
  std::vector<Swap> word;
  word.reserve(p.length() + q.length());
  word.insert(word.end(), p.swaps().begin(), p.swaps().end());
  word.insert(word.end(), q.swaps().begin(), q.swaps().end());
  return Perm(std::move(word));
}

Perm inverse(const Perm& p) {
  return Perm(std::vector<Swap>(p.swaps().rbegin(), p.swaps().rend()));
}

NameSet domain(const Perm& p) {
  std::vector<Name> names;
  names.reserve(2 * p.length());
  for (const Swap& s : p.swaps()) {
    names.push_back(s.first);
    names.push_back(s.second);
  }
  return NameSet(std::move(names));
}

NameSet image(const Perm& p, const NameSet& s) {
  if (p.is_empty_word()) return s;
  std::vector<Name> moved;
  moved.reserve(s.size());
  for (Name a : s) moved.push_back(p(a));
  return NameSet(std::move(moved));
}

bool perm_equiv(const Perm& p, const Perm& q) {
  const NameSet probe = domain(p) | domain(q);
  return std::all_of(probe.begin(), probe.end(),
                     [&](Name a) { return p(a) == q(a); });
}

std::string to_string(const Perm& p) {
  if (p.is_empty_word()) return "ε";
  std::string out;
  for (const Swap& s : p.swaps())
    out += "(" + to_string(s.first) + " " + to_string(s.second) + ")";
  return out;
}

}  // namespace nominal
