// Command-line surface: classification, spectral/Peirce/Frobenius
// computation, correspondence reports, table rendering and the verification
// suites. JSON in, JSON out; --pretty renders human-readable tables.
//
// Exit codes: 0 success, 1 usage error, 2 precondition error, 3 numerical
// failure, 4 verification-suite failure.
#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jok/correspondence.hpp"
#include "jok/errors.hpp"
#include "jok/json_io.hpp"
#include "jok/verify.hpp"

namespace jok::cli {

namespace detail {

inline Algebra parse_algebra(const std::string& text) {
  const auto colon = text.find(':');
  const std::string fam = text.substr(0, colon);
  if (colon == std::string::npos) {
    if (fam == "albert") return make_algebra(Family::Albert, 3);
    throw precondition_error("--algebra needs FAMILY:PARAM (got '" + text +
                             "')");
  }
  int param = 0;
  try {
    param = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw precondition_error("--algebra parameter must be an integer in '" +
                             text + "'");
  }
  return make_algebra(io::family_from_string(fam), param);
}

inline GroupDescriptor parse_group(const std::string& text) {
  std::string head = text;
  int param = 0;
  bool has_param = false;
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    head = text.substr(0, colon);
    try {
      param = std::stoi(text.substr(colon + 1));
      has_param = true;
    } catch (const std::exception&) {
      throw precondition_error("--group parameter must be an integer in '" +
                               text + "'");
    }
  }
  for (auto& ch : head) ch = static_cast<char>(std::tolower(ch));
  GroupFamily family;
  if (head == "sp" || head == "i1") family = GroupFamily::I1;
  else if (head == "u" || head == "i2") family = GroupFamily::I2;
  else if (head == "ostar" || head == "o*" || head == "i3")
    family = GroupFamily::I3;
  else if (head == "o2" || head == "i4") family = GroupFamily::I4;
  else if (head == "e7" || head == "i5") family = GroupFamily::I5;
  else
    throw precondition_error(
        "--group must be one of sp:n, u:n, ostar:n, o2:j, e7 (got '" + text +
        "')");
  if (family != GroupFamily::I5 && !has_param)
    throw precondition_error("--group " + head + " needs a parameter, e.g. " +
                             head + ":4");
  return catalog(family, param);
}

inline Signature parse_signature(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw precondition_error("signature must be 'p,m' (got '" + text + "')");
  try {
    return Signature{std::stoi(text.substr(0, comma)),
                     std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw precondition_error("signature components must be integers in '" +
                             text + "'");
  }
}

inline io::json read_input_json(const std::string& in_path,
                                std::istream& fallback) {
  std::string text;
  if (!in_path.empty()) {
    std::ifstream file(in_path);
    if (!file.good())
      throw precondition_error("cannot open input file '" + in_path + "'");
    std::ostringstream os;
    os << file.rdbuf();
    text = os.str();
  } else {
    std::ostringstream os;
    os << fallback.rdbuf();
    text = os.str();
  }
  try {
    return io::json::parse(text);
  } catch (const io::json::exception& e) {
    throw precondition_error(std::string("input is not valid JSON: ") +
                             e.what());
  }
}

inline io::json suites_to_json(const std::vector<verify::SuiteResult>& runs) {
  io::json out = io::json::array();
  for (const auto& suite : runs) {
    io::json checks = io::json::array();
    for (const auto& c : suite.checks) {
      checks.push_back(io::json{
          {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    out.push_back(io::json{{"suite", suite.suite},
                           {"passed", suite.passed()},
                           {"failed", suite.failed()},
                           {"checks", checks}});
  }
  return out;
}

}  // namespace detail

// Runs the CLI on the given arguments. `input` substitutes for stdin.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err, std::istream& input = std::cin) {
  CLI::App app{"Jordan-algebraic orbit kit: exact structure-constant "
               "arithmetic, spectral and Peirce calculus, orbit signatures "
               "and theta-correspondence bookkeeping"};
  app.require_subcommand(1);

  std::string algebra_text, in_path, group_text, pi_label, suite = "all";
  std::string golden_dir = "docs/golden";
  std::vector<std::string> signature_texts;
  std::uint64_t seed = 0;
  int trials = 1000;
  double tol = 1e-9;
  bool pretty = false;

  auto add_input_opts = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", algebra_text,
                    "algebra FAMILY:PARAM (e.g. symR:3, albert:3); checked "
                    "against or substituted into the input element");
    cmd->add_option("--in", in_path, "input JSON file (default: stdin)");
    cmd->add_option("--tol", tol, "tolerance (default 1e-9)");
  };

  auto* classify =
      app.add_subcommand("classify", "signature of an element's L-orbit");
  add_input_opts(classify);
  auto* spectral =
      app.add_subcommand("spectral", "spectral decomposition of an element");
  add_input_opts(spectral);
  auto* peirce = app.add_subcommand(
      "peirce", "Peirce system of an idempotent (JSON: element, or "
                "{\"c\":..., \"x\":...} for components)");
  add_input_opts(peirce);
  auto* frobenius = app.add_subcommand(
      "frobenius", "Frobenius transform report for {\"c\",\"x\",\"xprime\","
                   "\"t\"}: printed component formulas vs the exponential "
                   "oracle");
  add_input_opts(frobenius);

  auto* tensor = app.add_subcommand(
      "tensor", "correspondence report for a tensor product of singular "
                "representations");
  tensor->add_option("--group", group_text,
                     "group: sp:n | u:n | ostar:n | o2:j | e7")
      ->required();
  tensor->add_option("--signatures", signature_texts,
                     "factor signatures, each 'p,m'")
      ->required()
      ->expected(-1);
  tensor->add_option("--pi", pi_label,
                     "also emit the Theta(pi) descriptor for this label");

  auto* table = app.add_subcommand("table", "render the group and X_pq tables");
  table->add_flag("--pretty", pretty, "plain text instead of JSON");

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", suite, "suite name or 'all' (see --list)");
  verify_cmd->add_option("--seed", seed, "base seed (default 0)");
  verify_cmd->add_option("--trials", trials,
                         "Monte-Carlo trials per check (default 1000)");
  verify_cmd->add_option("--golden", golden_dir,
                         "directory with the golden tables");
  verify_cmd->add_flag("--pretty", pretty, "human-readable summary");
  bool list_suites = false;
  verify_cmd->add_flag("--list", list_suites, "list suite names and exit");

  try {
    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    app.parse(std::move(argv));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*classify || *spectral || *peirce || *frobenius) {
      Algebra requested;
      if (!algebra_text.empty())
        requested = detail::parse_algebra(algebra_text);
      const io::json in = detail::read_input_json(in_path, input);

      if (*classify) {
        const Element x = io::element_from_json(in, requested);
        out << io::json{{"signature",
                         io::signature_to_json(signature_of(x, tol))}}
                   .dump(2)
            << "\n";
      } else if (*spectral) {
        const Element x = io::element_from_json(in, requested);
        out << io::spectral_to_json(spectral_decompose(x, tol)).dump(2)
            << "\n";
      } else if (*peirce) {
        if (in.contains("c")) {
          const Element c = io::element_from_json(in.at("c"), requested);
          auto result = io::peirce_to_json(peirce_system(c));
          if (in.contains("x")) {
            const Element x = io::element_from_json(in.at("x"), requested);
            const auto comps = peirce_components(c, x);
            result["components"] = io::json::array(
                {io::element_to_json(comps[0]), io::element_to_json(comps[1]),
                 io::element_to_json(comps[2])});
          }
          out << result.dump(2) << "\n";
        } else {
          const Element c = io::element_from_json(in, requested);
          out << io::peirce_to_json(peirce_system(c)).dump(2) << "\n";
        }
      } else {
        for (const char* key : {"c", "x", "xprime", "t"}) {
          if (!in.contains(key))
            throw precondition_error(std::string("frobenius input needs \"") +
                                     key + "\"");
        }
        const Element c = io::element_from_json(in.at("c"), requested);
        const Element x = io::element_from_json(in.at("x"), requested);
        const Element xp = io::element_from_json(in.at("xprime"), requested);
        const double t = in.at("t").get<double>();
        auto result =
            io::frobenius_to_json(frobenius_components_paper(c, xp, t, x));
        result["n_t"] = io::element_to_json(n_t_element(c, t, x));
        out << result.dump(2) << "\n";
      }
      return 0;
    }

    if (*tensor) {
      std::vector<Signature> sigs;
      for (const auto& s : signature_texts)
        sigs.push_back(detail::parse_signature(s));
      const TensorProblem problem(detail::parse_group(group_text), sigs);
      auto result = io::report_to_json(correspondence_report(problem));
      if (!pi_label.empty()) {
        result["theta"] =
            io::theta_to_json(theta_descriptor(problem, pi_label));
      }
      out << result.dump(2) << "\n";
      return 0;
    }

    if (*table) {
      const auto [groups, xpq] = render_paper_tables();
      if (pretty) {
        out << groups << "\n" << xpq;
      } else {
        out << io::json{{"groups_table", groups}, {"xpq_table", xpq}}.dump(2)
            << "\n";
      }
      return 0;
    }

    if (*verify_cmd) {
      if (list_suites) {
        for (const auto& name : verify::suite_names()) out << name << "\n";
        return 0;
      }
      verify::Options opt;
      opt.seed = seed;
      opt.trials = trials;
      opt.golden_dir = golden_dir;
      std::vector<verify::SuiteResult> runs;
      if (suite == "all") {
        runs = verify::run_all(opt);
      } else {
        runs.push_back(verify::run_suite(suite, opt));
      }
      int failed = 0;
      for (const auto& r : runs) failed += r.failed();
      if (pretty) {
        for (const auto& r : runs) {
          out << "suite " << r.suite << ": " << r.passed() << " passed, "
              << r.failed() << " failed\n";
          for (const auto& c : r.checks) {
            out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name
                << " -- " << c.detail << "\n";
          }
        }
        out << (failed == 0 ? "all checks passed\n"
                            : std::to_string(failed) + " checks failed\n");
      } else {
        io::json summary{{"suites", detail::suites_to_json(runs)},
                         {"failed", failed}};
        out << summary.dump(2) << "\n";
      }
      return failed == 0 ? 0 : 4;
    }
  } catch (const precondition_error& e) {
    err << "precondition error: " << e.what() << "\n";
    return 2;
  } catch (const numerical_error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

}  // namespace jok::cli
