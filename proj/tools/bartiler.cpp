// bartiler: counts, generating functions and b-files for 2k x n bar tilings.
//
// Exit status: 0 success, 1 a verification check failed, 2 usage or
// capacity error.

#include "bartiler/error.hpp"
#include "bartiler/gf.hpp"
#include "bartiler/json_io.hpp"
#include "bartiler/tiling.hpp"
#include "bartiler/verify.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

namespace {

using bartiler::BigInt;

struct Options {
  std::string format = "text";
  unsigned threads = 1;
  std::size_t capacity = bartiler::OracleLimits::default_max_states();

  int k = 2;
  long n = 0;
  std::string a = "1";
  std::string b = "1";
  bool weighted = false;
  long terms = -1;

  int m = 0;
  int bar = 2;
  bool list = false;

  std::string suite = "all";
  std::string level = "quick";

  long max = 0;
};

bool json_output(const Options& o) { return o.format == "json"; }

int cmd_count(const Options& o) {
  const auto n = static_cast<std::size_t>(o.n);
  if (o.weighted) {
    const bartiler::XSeries s = bartiler::rational_to_series(bartiler::F_main(o.k), n);
    if (json_output(o)) {
      std::cout << bartiler::to_json(s[n]).dump() << '\n';
    } else {
      std::cout << bartiler::to_string(s[n]) << '\n';
    }
    return 0;
  }
  const BigInt a = bartiler::from_decimal(o.a);
  const BigInt b = bartiler::from_decimal(o.b);
  const BigInt count = bartiler::big_count(o.k, n, a, b);
  if (json_output(o)) {
    nlohmann::json j{{"k", o.k}, {"n", o.n}, {"a", o.a}, {"b", o.b},
                     {"count", bartiler::to_decimal(count)}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << bartiler::to_decimal(count) << '\n';
  }
  return 0;
}

int cmd_gf(const Options& o) {
  const bartiler::RationalGF f = bartiler::F_main(o.k);
  std::vector<bartiler::BiPoly> series;
  if (o.terms >= 0) {
    const auto s = bartiler::rational_to_series(f, static_cast<std::size_t>(o.terms));
    series = s.coeffs();
  }
  if (json_output(o)) {
    nlohmann::json j = bartiler::to_json(f);
    j["k"] = o.k;
    if (o.terms >= 0) {
      j["series"] = nlohmann::json::array();
      for (const auto& c : series) j["series"].push_back(bartiler::to_json(c));
    }
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "num: " << bartiler::to_string(f.num()) << '\n';
  std::cout << "den: " << bartiler::to_string(f.den()) << '\n';
  for (std::size_t i = 0; i < series.size(); ++i) {
    std::cout << "x^" << i << ": " << bartiler::to_string(series[i]) << '\n';
  }
  return 0;
}

int cmd_oracle(const Options& o) {
  bartiler::OracleLimits limits;
  limits.threads = o.threads;
  limits.max_states = o.capacity;
  if (o.list) {
    bartiler::enumerate_tilings(
        o.m, static_cast<int>(o.n), o.bar,
        [](const bartiler::Tiling& t) { std::cout << bartiler::to_json(t).dump() << '\n'; },
        limits);
  }
  const bartiler::BiPoly w = bartiler::count_tilings(o.m, static_cast<int>(o.n), o.bar, limits);
  const BigInt total = w.evaluate(1, 1);
  if (json_output(o)) {
    nlohmann::json j{{"m", o.m},
                     {"n", o.n},
                     {"k", o.bar},
                     {"weighted", bartiler::to_json(w)},
                     {"count", bartiler::to_decimal(total)}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "weighted: " << bartiler::to_string(w) << '\n';
    std::cout << "count: " << bartiler::to_decimal(total) << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o) {
  const auto level = o.level == "full" ? bartiler::Level::Full : bartiler::Level::Quick;
  const auto results = bartiler::run_suite(o.suite, level, o.threads);
  bool ok = true;
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (json_output(o)) {
      j.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.passed) std::cout << ": " << r.detail;
      std::cout << '\n';
    }
  }
  if (json_output(o)) std::cout << j.dump() << '\n';
  return ok ? 0 : 1;
}

int cmd_bfile(const Options& o) {
  const bartiler::RationalGF f = bartiler::F_main(o.k);
  bartiler::coeff_stream(f, static_cast<std::size_t>(o.max), 1, 1,
                         [](std::size_t n, const BigInt& c) {
                           std::cout << n << ' ' << bartiler::to_decimal(c) << '\n';
                         });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of 2k x n rectangle tilings by k x 1 bars"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads for the oracle DP")
      ->check(CLI::Range(1U, 256U))
      ->capture_default_str();
  app.add_option("--capacity", o.capacity,
                 "Maximum DP profiles per column (default 2^22 or $BARTILER_CAPACITY)")
      ->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count", "Tilings of a 2k x n rectangle");
  count->add_option("--k", o.k, "Bar length")->required()->check(CLI::Range(2, 1000));
  count->add_option("--n", o.n, "Rectangle width")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--a", o.a, "Weight of a vertical bar (integer)");
  count->add_option("--b", o.b, "Weight of a horizontal bar (integer)");
  count->add_flag("--weighted", o.weighted, "Print t(2k,n;k) as a polynomial in a, b");

  auto* gf = app.add_subcommand("gf", "Numerator and denominator of F_k");
  gf->add_option("--k", o.k, "Bar length")->required()->check(CLI::Range(2, 1000));
  gf->add_option("--terms", o.terms, "Also print the series through x^T")
      ->check(CLI::NonNegativeNumber);

  auto* oracle = app.add_subcommand("oracle", "Brute-force weighted count of an m x n rectangle");
  oracle->add_option("--m", o.m, "Rows")->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--n", o.n, "Columns")->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--bar", o.bar, "Bar length")->required()->check(CLI::Range(1, 64));
  oracle->add_flag("--list", o.list, "Stream each tiling as a JSON line first");

  auto* verify = app.add_subcommand("verify", "Run identity checks");
  verify->add_option("--suite", o.suite, "Suite to run")
      ->check(CLI::IsMember(bartiler::suite_names()))
      ->capture_default_str();
  verify->add_option("--level", o.level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();

  auto* bfile = app.add_subcommand("bfile", "OEIS b-file of t(2k,n;k) at a = b = 1");
  bfile->add_option("--k", o.k, "Bar length")->required()->check(CLI::Range(2, 1000));
  bfile->add_option("--max", o.max, "Last index")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return cmd_count(o);
    if (gf->parsed()) return cmd_gf(o);
    if (oracle->parsed()) return cmd_oracle(o);
    if (verify->parsed()) return cmd_verify(o);
    if (bfile->parsed()) return cmd_bfile(o);
  } catch (const bartiler::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
