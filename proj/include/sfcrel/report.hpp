#pragma once

// Result of one CLI run: the analytic value and/or oracle estimates, with
// the scenario echoed back.

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sfcrel/analytic.hpp"
#include "sfcrel/experiments.hpp"
#include "sfcrel/oracle.hpp"
#include "sfcrel/scenario_io.hpp"

namespace sfcrel {

struct ReliabilityReport {
  std::string engine;  // analytic | exhaustive | monte_carlo | verify
  Scenario scenario;
  std::optional<ReliabilityValue> analytic;
  std::optional<double> exhaustive;
  std::optional<McEstimate> monte_carlo;
  std::optional<std::uint64_t> seed;
  std::optional<bool> passed;
  std::chrono::nanoseconds elapsed{0};
};

inline ReliabilityReport make_report(const Scenario& s, const VerifyReport& v,
                                     std::uint64_t seed) {
  ReliabilityReport r;
  r.engine = "verify";
  r.scenario = s;
  r.analytic = ReliabilityValue{v.analytic, 0, {}};
  r.exhaustive = v.exhaustive;
  r.monte_carlo = v.monte_carlo;
  r.seed = seed;
  r.passed = v.passed();
  return r;
}

inline nlohmann::json report_to_json(const ReliabilityReport& r, bool include_timing = false) {
  nlohmann::json doc;
  doc["engine"] = r.engine;
  if (r.analytic) {
    doc["analytic"] = {{"value", r.analytic->value}};
    if (r.analytic->term_count) doc["analytic"]["term_count"] = r.analytic->term_count;
  }
  if (r.exhaustive) doc["exhaustive"] = *r.exhaustive;
  if (r.monte_carlo)
    doc["monte_carlo"] = {{"mean", r.monte_carlo->mean},
                          {"ci95_half_width", r.monte_carlo->half_width},
                          {"successes", r.monte_carlo->successes},
                          {"trials", r.monte_carlo->trials}};
  if (r.seed) doc["seed"] = *r.seed;
  if (r.passed) doc["passed"] = *r.passed;
  if (include_timing) doc["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  doc["scenario"] = scenario_to_json(r.scenario);
  return doc;
}

namespace detail {
inline std::string fixed10(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10f", v);
  return buf;
}
}  // namespace detail

inline std::string report_to_text(const ReliabilityReport& r) {
  std::ostringstream out;
  if (r.analytic) {
    out << "analytic     " << detail::fixed10(r.analytic->value);
    if (r.analytic->term_count) out << "  (" << r.analytic->term_count << " terms)";
    out << '\n';
  }
  if (r.exhaustive) out << "exhaustive   " << detail::fixed10(*r.exhaustive) << '\n';
  if (r.monte_carlo)
    out << "monte carlo  " << detail::fixed10(r.monte_carlo->mean) << " +/- "
        << detail::fixed10(r.monte_carlo->half_width) << "  (" << r.monte_carlo->trials
        << " trials, seed " << r.seed.value_or(0) << ")\n";
  if (r.passed) out << "verdict      " << (*r.passed ? "pass" : "FAIL") << '\n';
  char buf[64];
  std::snprintf(buf, sizeof buf, "elapsed      %.3f ms\n",
                std::chrono::duration<double, std::milli>(r.elapsed).count());
  out << buf;
  return out.str();
}

/// One header line and one data row.
inline std::string report_to_csv(const ReliabilityReport& r) {
  auto opt = [](const std::optional<double>& v) {
    return v ? detail::format_value(*v) : std::string{};
  };
  std::ostringstream out;
  out << "engine,analytic,exhaustive,mc_mean,mc_half_width,trials,passed\n";
  out << r.engine << ',' << opt(r.analytic ? std::optional(r.analytic->value) : std::nullopt)
      << ',' << opt(r.exhaustive) << ','
      << opt(r.monte_carlo ? std::optional(r.monte_carlo->mean) : std::nullopt) << ','
      << opt(r.monte_carlo ? std::optional(r.monte_carlo->half_width) : std::nullopt) << ','
      << (r.monte_carlo ? std::to_string(r.monte_carlo->trials) : std::string{}) << ','
      << (r.passed ? (*r.passed ? "true" : "false") : "") << '\n';
  return out.str();
}

}  // namespace sfcrel
