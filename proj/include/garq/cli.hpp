// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file cli.hpp
 * @brief The `garq` command line: fidelity, pfaffian, moment and charfn.
 *
 * Results go to `out` as JSON with sorted keys and 15 significant digits;
 * diagnostics go to `err`. Exit codes: 0 success, 2 input or validation
 * error, 3 size error.
 */

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace garq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitSize = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace garq::cli
