// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NOMINAL_ATOMS_HPP
#define NOMINAL_ATOMS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace nominal {

/// An atom. Only its identity matters; the index is exposed for ordering,
/// hashing and rendering, never for arithmetic on names.
class Name {
 public:
  constexpr explicit Name(std::uint32_t index) noexcept : index_(index) {}

  constexpr std::uint32_t index() const noexcept { return index_; }

  friend constexpr bool operator==(Name, Name) noexcept = default;
  friend constexpr auto operator<=>(Name, Name) noexcept = default;

 private:
  std::uint32_t index_;
};

/// Finite set of names kept as a sorted, duplicate-free vector.
class NameSet {
 public:
  using const_iterator = std::vector<Name>::const_iterator;

  NameSet() = default;
  NameSet(std::initializer_list<Name> names);
  explicit NameSet(std::vector<Name> names);

  bool contains(Name a) const noexcept;
  bool empty() const noexcept { return names_.empty(); }
  std::size_t size() const noexcept { return names_.size(); }
  const_iterator begin() const noexcept { return names_.begin(); }
  const_iterator end() const noexcept { return names_.end(); }

  /// Largest name, or nothing for the empty set.
  std::optional<Name> max() const noexcept;

  void insert(Name a);
  void erase(Name a);

  bool is_subset_of(const NameSet& other) const noexcept;

  NameSet& operator|=(const NameSet& other);
  NameSet& operator-=(const NameSet& other);

  friend NameSet operator|(NameSet lhs, const NameSet& rhs) { return lhs |= rhs; }
  friend NameSet operator-(NameSet lhs, const NameSet& rhs) { return lhs -= rhs; }
  friend NameSet operator&(const NameSet& lhs, const NameSet& rhs);

  friend bool operator==(const NameSet&, const NameSet&) = default;

 private:
  std::vector<Name> names_;
};

/// Deterministic choice of a name outside `avoid`: one past the largest
/// index, or index 0 for the empty set.
Name fresh_for(const NameSet& avoid) noexcept;

/// `k` pairwise-distinct names, none of them in `avoid`.
std::vector<Name> fresh_many(const NameSet& avoid, std::size_t k);

std::string to_string(Name a);
std::string to_string(const NameSet& s);

}  // namespace nominal

template <>
struct std::hash<nominal::Name> {
  std::size_t operator()(nominal::Name a) const noexcept {
    return std::hash<std::uint32_t>{}(a.index());
  }
};

#endif  // NOMINAL_ATOMS_HPP
