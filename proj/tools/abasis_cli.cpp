// Command line front end: analyze a set expression or a named family, run the
// prime sweeps and the randomized oracle cross-check.
//
// Exit codes: 0 every verdict passed, 1 a verdict failed or a computation
// error occurred, 2 usage or parse error.

#include <CLI11.hpp>
#include <fmt/format.h>
#include <iostream>
#include <sstream>

#include "abasis/dessentializer.hpp"
#include "abasis/primes.hpp"
#include "abasis/report.hpp"
#include "abasis/set_expr.hpp"

namespace {

using abasis::report::Json;

std::vector<int> parse_counts(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw CLI::ValidationError("counts", "expected comma-separated integers");
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("counts", "expected at least one count");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive bases of eventually periodic sets: order, essential elements and parts, dessentialization"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::optional<int> h_max;
  abasis::Int modulus_cap = abasis::kDefaultModulusCap;
  int precision_bits = 64;
  std::uint64_t seed = 1;
  bool at_most = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--hmax", h_max, "Give up with an error past this many summands");
  app.add_option("--modulus-cap", modulus_cap, "Largest modulus a family may have")->capture_default_str();
  app.add_option("--precision-bits", precision_bits, "Float precision for the sweep (<= 332)")->capture_default_str();
  app.add_option("--seed", seed, "Seed for oracle-check")->capture_default_str();
  app.add_flag("--at-most", at_most, "Also report the order with at most h summands");

  std::string expr;
  auto* analyze = app.add_subcommand("analyze", "Analyze a set expression, e.g. \"6N U {2,3}\"");
  analyze->add_option("expr", expr, "Set expression")->required();

  std::string kind;
  std::string params;
  auto* family = app.add_subcommand("family", "Analyze a built-in family: An <n>, Xn <n>, prescribed <s0,s1,...>");
  family->add_option("kind", kind)->required()->check(CLI::IsMember({"An", "Xn", "prescribed"}));
  family->add_option("params", params)->required();

  int n_max = 0;
  bool rows = false;
  auto* sweep = app.add_subcommand("sweep", "Compare C_{h_n} with the constant C for 2 <= n <= n_max");
  sweep->add_option("n_max", n_max)->required();
  sweep->add_flag("--rows", rows, "Include every row (n, h_n, C_{h_n}, verdict)");

  abasis::Int lo = 0;
  abasis::Int hi = 0;
  auto* mr = app.add_subcommand("verify-mr", "Check the two prime-sum lower bounds on [lo, hi]");
  mr->add_option("lo", lo)->required();
  mr->add_option("hi", hi)->required();

  int iterations = 100;
  auto* oracle = app.add_subcommand("oracle-check", "Cross-check the engine against brute force on random bases");
  oracle->add_option("--iters", iterations)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Json report;
  try {
    const abasis::report::AnalyzeOptions options{h_max, at_most};
    if (*analyze) {
      report["input"] = expr;
      report.update(abasis::report::analyze(abasis::parse_set_expr(expr), options));
    } else if (*family) {
      abasis::EPS s;
      if (kind == "prescribed") {
        s = abasis::construct_prescribed(parse_counts(params), modulus_cap);
      } else {
        const int n = std::stoi(params);
        s = kind == "An" ? abasis::family_An(n, modulus_cap) : abasis::family_Xn(n, modulus_cap);
      }
      report["family"] = kind + " " + params;
      report.update(abasis::report::analyze(s, options));
    } else if (*sweep) {
      report = abasis::report::sweep(n_max, precision_bits, rows);
    } else if (*mr) {
      report = abasis::report::verify_mr(lo, hi);
    } else {
      report = abasis::report::oracle_check(seed, iterations);
    }
  } catch (const abasis::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: expected an integer parameter\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (format == "json") {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << abasis::report::render_text(report);
  }
  return abasis::report::passed(report) ? 0 : 1;
}
