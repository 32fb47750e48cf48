// Acceptance harness: runs each acceptance criterion at its stated tolerance
// and sample count, printing one pass/fail line per criterion with the
// measured runtime. Exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "jok/cli.hpp"
#include "jok/correspondence.hpp"
#include "jok/orbits.hpp"
#include "jok/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;
};

int g_failures = 0;

void report(int id, const std::string& name, const Outcome& outcome,
            double seconds, double limit_seconds) {
  const bool in_time = limit_seconds <= 0.0 || seconds < limit_seconds;
  const bool ok = outcome.passed && in_time;
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %2d: %s (%.2f s%s)\n", ok ? "PASS" : "FAIL", id,
              name.c_str(), seconds,
              limit_seconds > 0.0
                  ? (", limit " + std::to_string(limit_seconds) + " s").c_str()
                  : "");
  if (!outcome.passed) std::printf("         %s\n", outcome.detail.c_str());
  if (!in_time) std::printf("         exceeded the runtime limit\n");
  std::fflush(stdout);
}

Outcome all_checks(const jok::verify::SuiteResult& suite) {
  Outcome o;
  for (const auto& c : suite.checks) {
    if (!c.passed) {
      o.passed = false;
      o.detail += c.name + ": " + c.detail + "; ";
    }
  }
  return o;
}

Outcome filtered_checks(const jok::verify::SuiteResult& suite,
                        const std::string& needle) {
  Outcome o;
  int matched = 0;
  for (const auto& c : suite.checks) {
    if (c.name.find(needle) == std::string::npos) continue;
    ++matched;
    if (!c.passed) {
      o.passed = false;
      o.detail += c.name + ": " + c.detail + "; ";
    }
  }
  if (matched == 0) {
    o.passed = false;
    o.detail = "no checks matched '" + needle + "'";
  }
  return o;
}

template <typename Fn>
std::pair<Outcome, double> timed(Fn&& fn) {
  const auto t0 = Clock::now();
  Outcome o = fn();
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  return {o, s};
}

}  // namespace

int main() {
  using namespace jok;
  verify::Options opt;
  opt.seed = 0;
  opt.trials = 1000;
  opt.golden_dir = JOK_GOLDEN_DIR;

  {
    auto [o, s] =
        timed([&] { return all_checks(verify::suite_tables(opt)); });
    report(1, "paper tables reproduce the golden files", o, s, 1.0);
  }
  {
    auto [o, s] =
        timed([&] { return all_checks(verify::suite_octonion(opt)); });
    report(2, "octonion composition law, 1e4 pairs at 1e-10", o, s, 1.0);
  }
  {
    auto [o, s] = timed([&] {
      return filtered_checks(verify::suite_algebra(opt), "Jordan identity");
    });
    report(3, "Jordan identity, 1e3 pairs per family at 1e-10", o, s, 5.0);
  }
  {
    auto [o, s] =
        timed([&] { return all_checks(verify::suite_spectral(opt)); });
    report(4, "spectral reconstruction/orthogonality at 1e-8 + char_poly "
              "oracle", o, s, 10.0);
  }
  {
    auto [o, s] =
        timed([&] { return all_checks(verify::suite_peirce(opt)); });
    report(5, "Peirce projectors at 1e-10, Albert dims (1,16,10)", o, s, 5.0);
  }
  {
    auto [o, s] =
        timed([&] { return all_checks(verify::suite_frobenius(opt)); });
    report(6, "Frobenius identities at 1e-9, discrepancies reported", o, s,
           10.0);
  }
  {
    auto [o, s] = timed([&] {
      return filtered_checks(verify::suite_signature(opt), "sign_N");
    });
    report(7, "signature additivity sign_N(tc+n_-) exhaustive x100", o, s,
           20.0);
  }
  {
    auto [o, s] = timed([&] {
      Outcome o2 = all_checks(verify::suite_sums(opt));
      // the desk catalog must cover the required cases
      const auto& cat = verify::sum_catalog();
      bool has_pair = false, has_triple = false;
      for (const auto& c : cat) {
        if (c.family != Family::Albert) continue;
        const std::vector<Signature> pair{{1, 0}, {1, 0}};
        const std::vector<Signature> triple{{1, 0}, {1, 0}, {1, 0}};
        if (c.signatures == pair) has_pair = true;
        if (c.signatures == triple) has_triple = true;
      }
      if (cat.size() < 10 || !has_pair || !has_triple) {
        o2.passed = false;
        o2.detail += "desk catalog is missing required cases; ";
      }
      return o2;
    });
    report(8, "dense generic sums >= 99% over 1e3 seeded trials", o, s, 60.0);
  }
  {
    auto [o, s] =
        timed([&] { return all_checks(verify::suite_lambda(opt)); });
    report(9, "lambda_v bookkeeping exhaustive for n <= 6", o, s, 0.0);
  }
  {
    auto [o, s] = timed([&] {
      Outcome o2 = filtered_checks(verify::suite_signature(opt), "round trip");
      const Outcome o3 = filtered_checks(verify::suite_correspondence(opt),
                                         "extension unique");
      if (!o3.passed) {
        o2.passed = false;
        o2.detail += o3.detail;
      }
      return o2;
    });
    report(10, "round-trip calculus and uniqueness iff strict", o, s, 0.0);
  }
  {
    auto [o, s] =
        timed([&] { return all_checks(verify::suite_quadratic(opt)); });
    report(11, "quadratic representation det scaling at 1e-8 + symR oracle",
           o, s, 0.0);
  }
  {
    auto [o, s] = timed([&] {
      Outcome o2;
      std::ostringstream out1, out2, err1, err2;
      std::istringstream in1, in2;
      const std::vector<std::string> argv{
          "verify", "--suite", "all", "--seed", "0",
          "--golden", JOK_GOLDEN_DIR};
      const auto t0 = Clock::now();
      const int code1 = cli::run(argv, out1, err1, in1);
      const double first =
          std::chrono::duration<double>(Clock::now() - t0).count();
      const int code2 = cli::run(argv, out2, err2, in2);
      if (code1 != 0 || code2 != 0) {
        o2.passed = false;
        o2.detail += "verify --suite all exited " + std::to_string(code1) +
                     "/" + std::to_string(code2) + "; ";
      }
      if (out1.str() != out2.str()) {
        o2.passed = false;
        o2.detail += "output differs between identical runs; ";
      }
      if (first >= 120.0) {
        o2.passed = false;
        o2.detail += "single run took " + std::to_string(first) + " s; ";
      }
      return o2;
    });
    report(12, "verify --suite all < 120 s, deterministic under fixed seed",
           o, s, 0.0);
  }

  std::printf("%s: %d of 12 criteria failed\n",
              g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              g_failures);
  return g_failures;
}
