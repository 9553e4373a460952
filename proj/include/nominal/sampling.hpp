// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOMINAL_SAMPLING_HPP
#define NOMINAL_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>

#include "nominal/atoms.hpp"
#include "nominal/permutation.hpp"

namespace nominal {

using Rng = std::mt19937_64;

template <class X>
using Generator = std::function<X(Rng&)>;

/// Uniform name from the pool {n0 .. n(pool-1)}.
Name sample_name(Rng& rng, std::uint32_t pool);

/// Random word of 0..max_swaps swaps over the pool.
Perm sample_perm(Rng& rng, std::uint32_t pool, std::size_t max_swaps);

/// A word extensionally equal to `p`, obtained by inserting degenerate swaps
/// (c c), cancelling pairs (c d)(c d), and flipping swap orientation.
Perm sample_equivalent_perm(Rng& rng, const Perm& p, std::uint32_t pool);

/// Two names (not necessarily distinct) outside `avoid`, drawn from the pool
/// and from two names just beyond it so that a choice always exists.
std::pair<Name, Name> sample_pair_outside(Rng& rng, const NameSet& avoid,
                                          std::uint32_t pool);

/// One name outside `avoid`, chosen as for sample_pair_outside.
Name sample_name_outside(Rng& rng, const NameSet& avoid, std::uint32_t pool);

}  // namespace nominal

#endif  // NOMINAL_SAMPLING_HPP
