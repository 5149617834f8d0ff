#include "abasis/report.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "abasis/dessentializer.hpp"
#include "abasis/essentials.hpp"
#include "abasis/oracle.hpp"
#include "abasis/order.hpp"
#include "abasis/primes.hpp"
#include "abasis/progression.hpp"

namespace abasis::report {

namespace {

Json certificate_json(const OrderCertificate& c) {
  return {{"order", c.order},
          {"modulus", c.modulus},
          {"coverage_threshold", c.coverage_threshold},
          {"least_flagged_sums", c.least_flagged_sums}};
}

Json bound_json(const BoundReport& r) {
  Json quantities = Json::object();
  for (const auto& [name, value] : r.quantities) quantities[name] = value;
  Json checks = Json::array();
  for (const BoundCheck& c : r.checks) {
    checks.push_back({{"relation", c.relation},
                      {"lhs", static_cast<double>(c.lhs)},
                      {"rhs", static_cast<double>(c.rhs)},
                      {"holds", c.holds}});
  }
  return {{"name", r.name}, {"quantities", quantities}, {"checks", checks},
          {"equality", r.equality}, {"vacuous", r.vacuous}, {"holds", r.holds()}};
}

Json trace_json(const DessentializationTrace& t) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const DessentializationStep& s = t.steps[i];
    steps.push_back({{"i", i}, {"m", s.module}, {"x0", s.anchor}, {"s", s.essentials}, {"set", s.set.to_string()}});
  }
  return {{"delta", t.delta}, {"steps", steps}};
}

Json progression_json(const ProgressionProfile& p) {
  return {{"raison", p.raison},
          {"offset", p.offset},
          {"reservoir", p.reservoir},
          {"dessentialized", p.dessentialized.to_string()},
          {"radical_length", p.radical_length},
          {"total_length", p.total_length}};
}

Json check_json(const InequalityCheck& c) {
  Json out = {{"formula", c.formula},
              {"checked", c.checked},
              {"failures", c.failures},
              {"worst_margin", static_cast<double>(c.worst_margin)},
              {"worst_n", c.worst_n}};
  if (c.first_failure) out["first_failure"] = *c.first_failure;
  if (c.last_failure) out["last_failure"] = *c.last_failure;
  out["holds"] = c.holds();
  return out;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

void render(const Json& node, int indent, std::string& out);

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return fmt::format("{:.12g}", v.get<double>());
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
    return s + "]";
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, x] : v.items()) s += (s.empty() ? "" : "  ") + k + "=" + scalar(x);
    return s;
  }
  return v.dump();
}

bool is_flat(const Json& v) {
  if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object() || (x.is_array() && !is_flat(x))) return false;
    }
  }
  return !v.is_object();
}

void render(const Json& node, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : node.items()) {
    if (is_flat(value)) {
      out += fmt::format("{}{}: {}\n", pad, key, scalar(value));
    } else if (value.is_object()) {
      out += fmt::format("{}{}:\n", pad, key);
      render(value, indent + 2, out);
    } else {
      out += fmt::format("{}{}:\n", pad, key);
      for (const auto& item : value) {
        if (item.is_object() && std::all_of(item.begin(), item.end(), [](const Json& x) { return is_flat(x); })) {
          out += fmt::format("{}  - {}\n", pad, scalar(item));
        } else if (item.is_object()) {
          out += fmt::format("{}  -\n", pad);
          render(item, indent + 4, out);
        } else {
          out += fmt::format("{}  - {}\n", pad, scalar(item));
        }
      }
    }
  }
}

}  // namespace

Json analyze(const EPS& s, const AnalyzeOptions& options) {
  Json out;
  out["set"] = s.to_string();
  out["gcd_of_differences"] = gcd_of_differences(s);
  const OrderOptions order_options{options.h_max};
  const BasisDecision decision = decide_basis(s, order_options);
  out["is_basis"] = decision.is_basis;

  if (!decision.is_basis) {
    out["warning"] = "not an additive basis";
    if (decision.cycle) out["cycle"] = {{"first_step", decision.cycle->first_step}, {"repeat_step", decision.cycle->repeat_step}};
    if (!s.is_finite()) out["progression"] = progression_json(raison_profile(s));
    out["verdict"] = verdict(false);
    return out;
  }

  out["order"] = certificate_json(*decision.certificate);
  if (options.at_most) out["order_at_most"] = order_at_most(s, order_options).order;

  const EssentialProfile ess = essential_elements(s);
  out["essential_elements"] = {{"elements", ess.elements},
                               {"divisors", ess.divisors},
                               {"q", ess.q},
                               {"module", ess.module},
                               {"x0", ess.least_non_essential}};
  const EPS d = elementary_set(s);
  const EPS p = primitive_set(s);
  out["elementary_set"] = {{"set", d.to_string()}, {"order", order(d, order_options).order}};
  out["primitive_set"] = {{"set", p.to_string()}, {"order", order(p, order_options).order}};

  bool ok = true;
  Json audits = Json::array();
  for (const BoundReport& r : {audit_order_sandwich(s), audit_divisor_sandwich(s), audit_prime_sum_bound(s)}) {
    ok = ok && r.holds();
    audits.push_back(bound_json(r));
  }

  const ProgressionProfile profile = raison_profile(s);
  out["progression"] = progression_json(profile);
  out["essential_subsets"] = essential_subsets(s);
  const PartCount count = audit_part_count(s);
  ok = ok && count.holds();
  audits.push_back({{"name", "essential part count"},
                    {"quantities", {{"count", count.count}, {"omega(a)", count.radical_length}}},
                    {"all_in_reservoir", count.all_in_reservoir},
                    {"holds", count.holds()}});

  out["dessentialization"] = {{"elementary", trace_json(dessentialize_elementary(s))},
                              {"general", trace_json(dessentialize_general(s))}};
  const DeltaBound bound = delta_bound(s);
  ok = ok && bound.holds;
  out["delta_bound"] = {{"order", bound.order},
                        {"effective_bound", bound.effective_bound},
                        {"value", bound.value},
                        {"delta", bound.delta},
                        {"holds", bound.holds}};
  out["audits"] = audits;
  out["verdict"] = verdict(ok);
  return out;
}

Json sweep(int n_max, int precision_bits, bool with_rows) {
  const SweepResult r = sweep_c(n_max, precision_bits);
  Json out = {{"n_max", n_max},
              {"precision_bits", precision_bits},
              {"constant", static_cast<double>(growth_constant())},
              {"argmax", r.argmax},
              {"all_within", r.all_within},
              {"ties", r.ties}};
  if (with_rows) {
    Json rows = Json::array();
    for (const SweepRow& row : r.rows) {
      rows.push_back({{"n", row.n}, {"h", row.h}, {"c", fmt::format("{:.12f}", static_cast<double>(row.c))},
                      {"within", row.within}});
    }
    out["rows"] = rows;
  }
  out["verdict"] = verdict(r.holds());
  return out;
}

Json verify_mr(Int n_lo, Int n_hi) {
  const MrReport r = abasis::verify_mr(n_lo, n_hi);
  return {{"n_lo", r.n_lo},
          {"n_hi", r.n_hi},
          {"sum_lower", check_json(r.sum_lower)},
          {"square_log", check_json(r.square_log)},
          {"verdict", verdict(r.holds())}};
}

Json oracle_check(std::uint64_t seed, int iterations) {
  const oracle::BatchReport r = oracle::check_random(seed, iterations);
  Json failing = Json::array();
  for (const oracle::InstanceReport& f : r.failing) {
    failing.push_back({{"set", f.set}, {"property_failures", f.property_failures}, {"disagreements", f.disagreements}});
  }
  return {{"seed", r.seed},
          {"iterations", r.iterations},
          {"order_comparisons", r.order_comparisons},
          {"subset_comparisons", r.subset_comparisons},
          {"property_failures", r.property_failures},
          {"disagreements", r.disagreements},
          {"failing", failing},
          {"verdict", verdict(r.holds())}};
}

bool passed(const Json& report) { return report.value("verdict", "") == "PASS"; }

std::string render_text(const Json& report) {
  std::string out;
  render(report, 0, out);
  return out;
}

}  // namespace abasis::report
