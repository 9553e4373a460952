// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#include "nominal/sampling.hpp"

#include <vector>

namespace nominal {

namespace {

std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::vector<Name> candidates_outside(const NameSet& avoid, std::uint32_t pool) {
  std::vector<Name> out;
  for (std::uint32_t i = 0; i < pool; ++i)
    if (!avoid.contains(Name(i))) out.push_back(Name(i));
  NameSet taken = avoid;
  for (std::uint32_t i = 0; i < pool; ++i) taken.insert(Name(i));
  for (Name a : fresh_many(taken, 2)) out.push_back(a);
  return out;
}

}  // namespace

Name sample_name(Rng& rng, std::uint32_t pool) {
  return Name(static_cast<std::uint32_t>(uniform_index(rng, pool)));
}

Perm sample_perm(Rng& rng, std::uint32_t pool, std::size_t max_swaps) {
  const std::size_t len = uniform_index(rng, max_swaps + 1);
  std::vector<Swap> word;
  word.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    word.push_back({sample_name(rng, pool), sample_name(rng, pool)});
  return Perm(std::move(word));
}

Perm sample_equivalent_perm(Rng& rng, const Perm& p, std::uint32_t pool) {
  std::vector<Swap> word = p.swaps();
  const std::size_t edits = uniform_index(rng, 4);
  for (std::size_t e = 0; e < edits; ++e) {
    const std::size_t pos = uniform_index(rng, word.size() + 1);
    switch (uniform_index(rng, 3)) {
      case 0: {
        const Name c = sample_name(rng, pool);
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(pos), Swap{c, c});
        break;
      }
      case 1: {
        const Swap s{sample_name(rng, pool), sample_name(rng, pool)};
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(pos), {s, s});
        break;
      }
      default:
        if (!word.empty()) {
          Swap& s = word[pos % word.size()];
          std::swap(s.first, s.second);
        }
        break;
    }
  }
  return Perm(std::move(word));
}

std::pair<Name, Name> sample_pair_outside(Rng& rng, const NameSet& avoid,
                                          std::uint32_t pool) {
  const std::vector<Name> options = candidates_outside(avoid, pool);
  return {options[uniform_index(rng, options.size())],
          options[uniform_index(rng, options.size())]};
}

Name sample_name_outside(Rng& rng, const NameSet& avoid, std::uint32_t pool) {
  const std::vector<Name> options = candidates_outside(avoid, pool);
  return options[uniform_index(rng, options.size())];
}

}  // namespace nominal
