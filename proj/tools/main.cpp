// Copyright 2026 The nominal-cpp Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "nominal/cli.hpp"

int main(int argc, char** argv) {
  return nominal::cli::run_cli(argc, argv, std::cout, std::cerr);
}
