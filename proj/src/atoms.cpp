// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#include "nominal/atoms.hpp"

#include <algorithm>
#include <iterator>

namespace nominal {

namespace {

void normalize(std::vector<Name>& names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
}

}  // namespace

NameSet::NameSet(std::initializer_list<Name> names) : names_(names) {
  normalize(names_);
}

NameSet::NameSet(std::vector<Name> names) : names_(std::move(names)) {
  normalize(names_);
}

bool NameSet::contains(Name a) const noexcept {
  return std::binary_search(names_.begin(), names_.end(), a);
}

std::optional<Name> NameSet::max() const noexcept {
  if (names_.empty()) return std::nullopt;
  return names_.back();
}

void NameSet::insert(Name a) {
  auto it = std::lower_bound(names_.begin(), names_.end(), a);
  if (it == names_.end() || *it != a) names_.insert(it, a);
}

void NameSet::erase(Name a) {
  auto it = std::lower_bound(names_.begin(), names_.end(), a);
  if (it != names_.end() && *it == a) names_.erase(it);
}

bool NameSet::is_subset_of(const NameSet& other) const noexcept {
  return std::includes(other.names_.begin(), other.names_.end(), names_.begin(),
                       names_.end());
}

NameSet& NameSet::operator|=(const NameSet& other) {
  if (other.names_.empty()) return *this;
  if (names_.empty()) {
    names_ = other.names_;
    return *this;
  }
  std::vector<Name> merged;
  merged.reserve(names_.size() + other.names_.size());
  std::set_union(names_.begin(), names_.end(), other.names_.begin(),
                 other.names_.end(), std::back_inserter(merged));
  names_ = std::move(merged);
  return *this;
}

NameSet& NameSet::operator-=(const NameSet& other) {
  if (names_.empty() || other.names_.empty()) return *this;
  std::vector<Name> kept;
  kept.reserve(names_.size());
  std::set_difference(names_.begin(), names_.end(), other.names_.begin(),
                      other.names_.end(), std::back_inserter(kept));
  names_ = std::move(kept);
  return *this;
}

NameSet operator&(const NameSet& lhs, const NameSet& rhs) {
  NameSet out;
  std::set_intersection(lhs.names_.begin(), lhs.names_.end(), rhs.names_.begin(),
                        rhs.names_.end(), std::back_inserter(out.names_));
  return out;
}

Name fresh_for(const NameSet& avoid) noexcept {
  const auto top = avoid.max();
  return top ? Name(top->index() + 1) : Name(0);
}

std::vector<Name> fresh_many(const NameSet& avoid, std::size_t k) {
  std::vector<Name> out;
  out.reserve(k);
  NameSet taken = avoid;
  for (std::size_t i = 0; i < k; ++i) {
    const Name a = fresh_for(taken);
    out.push_back(a);
    taken.insert(a);
  }
  return out;
}

std::string to_string(Name a) { return "n" + std::to_string(a.index()); }

std::string to_string(const NameSet& s) {
  std::string out = "{";
  bool first = true;
  for (Name a : s) {
    if (!first) out += ", ";
    out += to_string(a);
    first = false;
  }
  return out + "}";
}

}  // namespace nominal
