// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include "garq/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace garq {

namespace {

using nlohmann::json;

double finite_number(const json& v) {
  if (!v.is_number()) throw ValidationError("malformed matrix file: entry parts must be numbers");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ValidationError("malformed matrix file: non-finite entry");
  return x;
}

long dimension(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long>() < 0) {
    throw ValidationError(std::string("malformed matrix file: missing or invalid \"") + key + "\"");
  }
  return doc[key].get<long>();
}

}  // namespace

ComplexMatrix parse_matrix_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed matrix file: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("malformed matrix file: expected an object");
  const long rows = dimension(doc, "rows");
  const long cols = dimension(doc, "cols");
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw ValidationError("malformed matrix file: missing \"entries\" array");
  }
  const json& entries = doc["entries"];
  if (static_cast<long>(entries.size()) != rows * cols) {
    throw ValidationError("malformed matrix file: entry count does not match rows * cols");
  }
  ComplexMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    for (long c = 0; c < cols; ++c) {
      const json& e = entries[r * cols + c];
      if (!e.is_array() || e.size() != 2) {
        throw ValidationError("malformed matrix file: entries must be [re, im] pairs");
      }
      m(r, c) = Complex(finite_number(e[0]), finite_number(e[1]));
    }
  }
  return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read matrix file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str());
}

std::string matrix_to_json(const ComplexMatrix& m) {
  json doc;
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      entries.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
  }
  doc["entries"] = std::move(entries);
  return doc.dump();
}

}  // namespace garq
