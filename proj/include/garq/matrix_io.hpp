// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file matrix_io.hpp
 * @brief JSON matrix files: {"rows": R, "cols": C, "entries": [[re, im], ...]}
 *        with entries in row-major order.
 */

#pragma once

#include <string>

#include "garq/calculus.hpp"

namespace garq {

/// Throws ValidationError on malformed input.
ComplexMatrix parse_matrix_json(const std::string& text);
ComplexMatrix read_matrix_file(const std::string& path);
/// Compact JSON; parse_matrix_json(matrix_to_json(m)) == m bit for bit.
std::string matrix_to_json(const ComplexMatrix& m);

}  // namespace garq
