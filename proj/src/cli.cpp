// Copyright 2026 The garq Authors
// SPDX-License-Identifier: Apache-2.0

#include "garq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "CLI11.hpp"
#include "garq/matrix_io.hpp"
#include "garq/oracle.hpp"
#include "json.hpp"

namespace garq::cli {

namespace {

using nlohmann::json;

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

json complex_object(Complex z) { return json{{"re", round15(z.real())}, {"im", round15(z.imag())}}; }

json complex_pair(Complex z) { return json::array({round15(z.real()), round15(z.imag())}); }

Complex parse_form_value(const std::string& text) {
  if (text == "1") return 1.0;
  if (text == "-1") return -1.0;
  if (text == "i") return Complex(0.0, 1.0);
  if (text == "-i") return Complex(0.0, -1.0);
  const auto comma = text.find(',');
  if (comma != std::string::npos) {
    char* end = nullptr;
    const std::string re = text.substr(0, comma), im = text.substr(comma + 1);
    const double a = std::strtod(re.c_str(), &end);
    const bool ok_re = end && *end == '\0' && !re.empty();
    const double b = std::strtod(im.c_str(), &end);
    const bool ok_im = end && *end == '\0' && !im.empty();
    if (ok_re && ok_im) return Complex(a, b);
  }
  throw ValidationError("--wrt-form expects 1, -1, i, -i or \"re,im\"");
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    char* end = nullptr;
    const long v = std::strtol(item.c_str(), &end, 10);
    if (*end != '\0') throw ValidationError("--indices expects a comma separated list of integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

int cmd_fidelity(const std::string& pure, const std::string& cov, bool verify, std::ostream& out) {
  const BasisProjection p = validate_basis_projection(read_matrix_file(pure));
  const CovarianceMatrix s = validate_covariance(read_matrix_file(cov));
  const double f2 = fidelity_sq(p, s);
  json doc{{"fidelity_squared", round15(f2)}, {"fidelity", round15(std::sqrt(f2))}};
  if (verify) {
    if (p.dim() != s.dim()) throw ValidationError("covariance dimension mismatch");
    const DenseOperator rho = density_matrix(s);
    const DenseOperator e = represent(support_projection(p).element());
    const double oracle = trace_expectation(rho, e).real();
    doc["oracle"] = round15(oracle);
    doc["delta"] = round15(std::abs(f2 - oracle));
  }
  emit(out, doc);
  return kExitOk;
}

int cmd_pfaffian(const std::string& path, const std::string& form, std::ostream& out) {
  const ComplexMatrix a = read_matrix_file(path);
  require_antisymmetric(a);
  Complex value;
  if (form.empty()) {
    value = pfaffian(a);
  } else {
    if (a.rows() % 2) throw ValidationError("--wrt-form needs an even dimension");
    value = pfaffian_wrt_form(TopForm(static_cast<int>(a.rows() / 2), parse_form_value(form)), a);
  }
  emit(out, complex_object(value));
  return kExitOk;
}

int cmd_moment(const std::string& cov, const std::string& indices, std::ostream& out) {
  const CovarianceMatrix s = validate_covariance(read_matrix_file(cov));
  const std::vector<int> idx = parse_indices(indices);
  emit(out, complex_object(quasifree_moment(s, idx)));
  return kExitOk;
}

int cmd_charfn(const std::string& cov, std::ostream& out) {
  const CovarianceMatrix s = validate_covariance(read_matrix_file(cov));
  if (s.dim() > 16) throw SizeError("charfn limited to 8 modes");
  const GHolFunction f = char_fn(s);
  json table = json::object();
  for (Mask subset : f.subsets()) {
    const Complex c = f.grassmann_coefficient(subset).scalar_part();
    const json pair = complex_pair(c);
    if (pair[0].get<double>() == 0.0 && pair[1].get<double>() == 0.0) continue;
    table[format_subset(subset)] = pair;
  }
  emit(out, table);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grassmann and CAR algebra calculus for quasifree fermionic states", "garq"};
  app.require_subcommand(1);

  std::string pure, cov, matrix, form, indices;
  bool verify = false;

  auto* fidelity = app.add_subcommand("fidelity", "Fidelity of a pure and a general quasifree state");
  fidelity->add_option("--pure", pure, "Basis projection P (matrix file)")->required();
  fidelity->add_option("--cov", cov, "Covariance S (matrix file)")->required();
  fidelity->add_flag("--verify", verify, "Cross-check against the dense oracle");

  auto* pf = app.add_subcommand("pfaffian", "Pfaffian of an antisymmetric matrix");
  pf->add_option("matrix", matrix, "Antisymmetric matrix file")->required();
  pf->add_option("--wrt-form", form, "Top-form coefficient: 1, -1, i, -i or \"re,im\"");

  auto* moment = app.add_subcommand("moment", "Quasifree moment omega(B_i1 ... B_ik)");
  moment->add_option("--cov", cov, "Covariance S (matrix file)")->required();
  moment->add_option("--indices", indices, "Comma separated 1-based indices")->required();

  auto* charfn = app.add_subcommand("charfn", "Characteristic function coefficients");
  charfn->add_option("--cov", cov, "Covariance S (matrix file)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "garq: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (fidelity->parsed()) return cmd_fidelity(pure, cov, verify, out);
    if (pf->parsed()) return cmd_pfaffian(matrix, form, out);
    if (moment->parsed()) return cmd_moment(cov, indices, out);
    if (charfn->parsed()) return cmd_charfn(cov, out);
  } catch (const SizeError& e) {
    err << "garq: " << e.what() << '\n';
    return kExitSize;
  } catch (const Error& e) {
    err << "garq: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace garq::cli
