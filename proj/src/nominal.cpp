// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#include "nominal/nominal.hpp"

#include <stdexcept>

namespace nominal {

const LawOutcome& LawReport::at(std::string_view law) const {
  for (const auto& o : outcomes)
    if (o.law == law) return o;
  throw std::out_of_range("no law named " + std::string(law));
}

std::string LawReport::summary() const {
  std::string out;
  for (const auto& o : outcomes) {
    out += o.law + ": " + (o.passed() ? "pass" : "FAIL") + " (" +
           std::to_string(o.cases - o.failures) + "/" + std::to_string(o.cases) + ")";
    if (!o.passed()) out += " e.g. " + o.counterexample;
    out += "\n";
  }
  return out;
}

}  // namespace nominal
