#pragma once

// Command-line front end. run() is the whole program minus main(), so tests
// can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 invalid input or usage, 2 internal verification
// failure.

#include "hypertoric/analysis.hpp"
#include "hypertoric/error.hpp"
#include "hypertoric/gale.hpp"
#include "hypertoric/intlinalg.hpp"
#include "hypertoric/io.hpp"
#include "hypertoric/report.hpp"
#include "hypertoric/terminalize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hypertoric::cli {

struct Options {
  std::string input = "-";
  bool json = false;
  std::string alpha;
  std::string path = "direct";
  bool show_steps = false;
  std::uint64_t max_enumeration = kDefaultMaxEnumeration;
  bool maximal_only = false;
  std::size_t column = 0;  // 1-based; 0 = first codimension-2 column
  bool timing = false;
};

namespace detail {

inline std::string join(std::span<const std::size_t> idx, bool one_based = true) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(idx[k] + (one_based ? 1 : 0));
  }
  return s;
}

inline std::string join(std::span<const Integer> xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ' ';
    s += xs[k].str();
  }
  return s;
}

inline IntVector parse_vector(const std::string& text) {
  std::string spaced = text;
  for (char& c : spaced)
    if (c == ',') c = ' ';
  std::istringstream in(spaced);
  IntVector v;
  for (std::string tok; in >> tok;) v.push_back(hypertoric::detail::parse_integer(tok));
  return v;
}

inline MatrixDocument read_input(const Options& opt, std::istream& in) {
  std::string text;
  if (opt.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(opt.input);
    if (!file) throw InvalidArgument("cannot open input file '" + opt.input + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  return parse_matrix_document(text, opt.input);
}

inline void print_matrix(std::ostream& out, const char* label, const IntMatrix& m) {
  out << label << " (" << m.shape() << "):\n" << render_plain_matrix(m);
}

inline void print_certificate(std::ostream& out, const ExactnessCertificate& c) {
  out << "exact: " << (c.exact() ? "true" : "false") << " (product_is_zero "
      << c.product_is_zero << ", a_surjective " << c.a_surjective << ", b_saturated "
      << c.b_saturated << ", ranks_complementary " << c.ranks_complementary << ")\n";
}

inline void print_step(std::ostream& out, const ExpansionStep& s) {
  out << "j0: " << s.input.j0 + 1 << "\nm: " << s.input.m << '\n';
  print_matrix(out, "P", s.input.P);
  print_matrix(out, "A in normal form", s.input.A_nf);
  print_matrix(out, "A'", s.A_prime);
  print_matrix(out, "B'", s.B_prime);
  out << "columns of A' come from columns " << join(s.column_origin) << " of A\n";
}

inline TerminalizationPath parse_path(const std::string& p) {
  if (p == "direct") return TerminalizationPath::Direct;
  if (p == "iterated") return TerminalizationPath::Iterated;
  throw InvalidArgument("--path must be 'direct' or 'iterated'");
}

inline int dispatch(const std::string& command, const Options& opt, std::istream& in,
                    std::ostream& out) {
  const auto started = std::chrono::steady_clock::now();
  const IntMatrix a = read_input(opt, in).matrix;
  const std::uint64_t limit = opt.max_enumeration;

  if (command == "snf") {
    const auto d = snf(a);
    if (opt.json)
      out << Json::object()
                 .set("invariant_factors", Json::numbers(d.invariant_factors))
                 .set("U", matrix_to_json(d.U))
                 .set("V", matrix_to_json(d.V))
                 .dump()
          << '\n';
    else {
      out << "invariant factors: " << join(d.invariant_factors) << '\n';
      print_matrix(out, "U", d.U);
      print_matrix(out, "V", d.V);
    }
  } else if (command == "hnf") {
    const auto h = hnf(a);
    if (opt.json)
      out << Json::object().set("H", matrix_to_json(h.H)).set("U", matrix_to_json(h.U)).dump()
          << '\n';
    else {
      print_matrix(out, "H", h.H);
      print_matrix(out, "U", h.U);
    }
  } else if (command == "kernel") {
    const IntMatrix k = kernel_basis(a);
    if (opt.json)
      out << matrix_to_json(k).dump() << '\n';
    else
      print_matrix(out, "kernel basis", k);
  } else if (command == "gale") {
    const GalePair g = gale_dual(a);
    if (opt.json)
      out << Json::object()
                 .set("A", matrix_to_json(g.A))
                 .set("B", matrix_to_json(g.B))
                 .set("certificate", to_json(g.certificate))
                 .dump()
          << '\n';
    else {
      print_matrix(out, "B", g.B);
      print_certificate(out, g.certificate);
    }
  } else if (command == "primitivize") {
    const auto p = primitivize_rows(a);
    if (opt.json)
      out << to_json(p).dump() << '\n';
    else {
      print_matrix(out, "B#", p.B_sharp);
      for (const auto& c : p.classes)
        out << "direction (" << join(c.direction) << "): multiplicities "
            << join(c.multiplicities) << " from rows " << join(c.source_rows) << '\n';
    }
  } else if (command == "expand-step") {
    if (!is_lattice_surjection(a)) throw NotSurjective();
    std::optional<std::size_t> j0;
    if (opt.column > 0)
      j0 = opt.column - 1;
    else
      for (std::size_t j = 0; j < a.cols() && !j0; ++j)
        if (sharp_test_at(a, j)) j0 = j;
    if (!j0) throw InvalidArgument("no codimension-2 column: every Gale row is already primitive");
    const IntMatrix b = gale_dual(a).B;
    const ExpansionStep s = step_expand(lemma5_normal_form(a, *j0), b);
    if (opt.json)
      out << to_json(s).dump() << '\n';
    else {
      print_step(out, s);
      print_certificate(out, s.certificate);
    }
  } else if (command == "terminalize") {
    const auto t = terminalize(a, parse_path(opt.path));
    if (opt.json)
      out << to_json(t, opt.show_steps).dump() << '\n';
    else {
      out << "path: " << opt.path << "\nn#: " << t.n_sharp << "\nd#: " << t.d_sharp << '\n';
      print_matrix(out, "A#", t.A_sharp);
      print_matrix(out, "B#", t.B_sharp);
      if (opt.show_steps) {
        if (t.steps.empty()) out << "no expansion steps recorded\n";
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
          out << "--- step " << i + 1 << " ---\n";
          print_step(out, t.steps[i]);
        }
      }
    }
  } else if (command == "classify") {
    const auto c = classify(a, limit);
    if (opt.json)
      out << to_json(c).dump() << '\n';
    else {
      out << "verdict: " << to_string(c.verdict) << '\n';
      out << "codim-2 columns: " << join(c.codim2_witnesses) << '\n';
      out << "non-primitive Gale rows:";
      for (const auto& r : c.nonprimitive_rows) out << ' ' << r.row + 1 << " (gcd " << r.gcd << ')';
      out << '\n';
    }
  } else if (command == "crepant") {
    const auto c = crepant_resolution_exists(a, limit);
    if (opt.json)
      out << to_json(c).dump() << '\n';
    else {
      out << "crepant resolution: " << (c.exists ? "true" : "false") << '\n';
      if (c.witness)
        out << "witness: rows " << join(c.witness->indices) << " of B# have minor "
            << c.witness->value << '\n';
    }
  } else if (command == "weyl") {
    const auto w = weyl_group(a);
    if (opt.json)
      out << to_json(w).dump() << '\n';
    else
      out << "factors: " << join(w.factors) << "\norder: " << w.order << '\n';
  } else if (command == "generic-check") {
    if (opt.alpha.empty()) throw InvalidArgument("generic-check needs --alpha");
    const IntVector alpha = parse_vector(opt.alpha);
    const bool generic = is_generic(a, alpha, limit);
    if (opt.json)
      out << Json::object()
                 .set("alpha", Json::numbers(alpha))
                 .set("generic", Json::boolean(generic))
                 .dump()
          << '\n';
    else
      out << "generic: " << (generic ? "true" : "false") << '\n';
  } else if (command == "generic-sample") {
    const IntVector alpha = sample_generic(a, limit);
    if (opt.json)
      out << Json::object().set("alpha", Json::numbers(alpha)).dump() << '\n';
    else
      out << "alpha: " << join(alpha) << '\n';
  } else if (command == "stratify") {
    const auto r = stratify(a, opt.maximal_only, limit);
    if (opt.json)
      out << to_json(r).dump() << '\n';
    else {
      out << "dimension formulas conditional on stratum non-emptiness\n";
      if (r.strata.empty()) out << "no singular strata\n";
      for (const auto& s : r.strata)
        out << "J = {" << join(s.columns) << "}: stratum dim " << s.stratum_dim
            << ", ambient dim " << s.ambient_dim << ", codim " << s.codim << '\n';
    }
  } else if (command == "report") {
    Json report = build_report(a, limit);
    if (opt.timing) {
      const auto ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
      std::ostringstream t;
      t.precision(3);
      t << std::fixed << ms;
      report.set("timing", Json::object().set("elapsed_ms", Json::raw_number(t.str())));
    }
    out << report.dump() << '\n';
  }
  return 0;
}

}  // namespace detail

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{
      "snf",      "hnf",   "kernel",        "gale",           "primitivize",
      "expand-step", "terminalize", "classify", "crepant",    "weyl",
      "generic-check", "generic-sample", "stratify", "report"};
  return names;
}

inline std::string describe(const std::string& name) {
  static const std::map<std::string, std::string> text{
      {"snf", "Smith normal form with transforms"},
      {"hnf", "row Hermite normal form with transform"},
      {"kernel", "integer kernel basis"},
      {"gale", "Gale dual B of A with exactness certificate"},
      {"primitivize", "split the rows of the input (a Gale dual B) into primitive copies"},
      {"expand-step", "one normal-form expansion at a codimension-2 column"},
      {"terminalize", "A# and B# by the direct or iterated route"},
      {"classify", "smooth, terminal-quotient or codim2-singular"},
      {"crepant", "does a crepant resolution exist (is B# unimodular)"},
      {"weyl", "Weyl group factors and order"},
      {"generic-check", "is --alpha off every wall"},
      {"generic-sample", "first generic parameter in a fixed enumeration"},
      {"stratify", "candidate singular strata and their dimensions"},
      {"report", "full JSON report"}};
  return text.at(name);
}

/// Runs the tool on argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Exact lattice algebra for toric hyperkahler varieties", "hypertoric"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options opt;

  for (const auto& name : commands()) {
    CLI::App* sub = app.add_subcommand(name, describe(name));
    sub->add_option("--input", opt.input, "matrix file, or - for standard input");
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_option("--max-enumeration", opt.max_enumeration,
                    "largest number of subsets an enumeration may visit");
    if (name == "generic-check") sub->add_option("--alpha", opt.alpha, "parameter vector")->required();
    if (name == "terminalize") {
      sub->add_option("--path", opt.path, "direct or iterated")
          ->check(CLI::IsMember({"direct", "iterated"}));
      sub->add_flag("--show-steps", opt.show_steps, "print every expansion step");
    }
    if (name == "expand-step")
      sub->add_option("--column", opt.column, "1-based column j0 (default: first eligible)")
          ->check(CLI::PositiveNumber);
    if (name == "stratify") sub->add_flag("--maximal-only", opt.maximal_only, "inclusion-maximal subsets only");
    if (name == "report") sub->add_flag("--timing", opt.timing, "append wall-clock timing");
  }

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());  // CLI11 consumes a reversed vector
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return detail::dispatch(command, opt, in, out);
  } catch (const InternalVerificationFailure& e) {
    err << "hypertoric " << command << ": internal verification failure: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "hypertoric " << command << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "hypertoric " << command << ": unexpected error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hypertoric::cli
