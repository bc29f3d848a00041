#pragma once

// Reliability sweeps over the canonical placements, plus a three-engine
// cross-check for single scenarios.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfcrel/analytic.hpp"
#include "sfcrel/model.hpp"
#include "sfcrel/oracle.hpp"
#include "sfcrel/tree.hpp"

namespace sfcrel {

/// Per-level reliabilities (DC, rack, server, VM) of the two studied profiles.
inline std::vector<double> case_profile(int case_id) {
  switch (case_id) {
    case 1: return {0.99999, 0.9999, 0.999, 0.99};
    case 2: return {0.99999, 0.99999, 0.99999, 0.99999};
  }
  throw std::invalid_argument("unknown reliability case " + std::to_string(case_id) +
                              " (expected 1 or 2)");
}

struct SweepSpec {
  int table = 2;
  int case_id = 1;
  std::vector<int> k_list;
  std::vector<int> r_list;
  std::vector<int> psi_list;
  std::uint64_t term_budget = kDefaultTermBudget;

  static SweepSpec defaults(int table, int case_id = 1) {
    SweepSpec s;
    s.table = table;
    s.case_id = case_id;
    if (table == 2) {
      s.k_list = {1};
      s.r_list = {0, 1, 100};
      s.psi_list = {4, 8};
    } else if (table == 3) {
      s.k_list = {1, 4, 8};
      s.psi_list = {4, 8};
    } else if (table == 4) {
      s.k_list = {4};
      s.r_list = {3};
      s.psi_list = {4};
    } else {
      throw std::invalid_argument("unknown table " + std::to_string(table) +
                                  " (expected 2, 3 or 4)");
    }
    return s;
  }
};

/// Canonical preset order: N_r descending, Δ ascending.
inline std::vector<PlacementPreset> all_presets(int depth = 4) {
  std::vector<PlacementPreset> out;
  for (int nr = depth; nr >= 1; --nr)
    for (int delta = 1; delta <= depth; ++delta) out.push_back({nr, delta});
  return out;
}

/// One class of n = k + r sub-SFCs, all placed by `preset`.
inline Scenario single_class_scenario(const PlacementPreset& preset, int k, int r, int psi,
                                      const std::vector<double>& reliabilities) {
  Scenario s;
  s.demand = {k, r, psi};
  s.classes.push_back(expand_preset(preset, k + r, reliabilities, s.hierarchy));
  return s;
}

/// k actives placed by `active`, r backups placed by `backup`, no shared hardware.
inline Scenario two_class_scenario(const PlacementPreset& active, const PlacementPreset& backup,
                                   int k, int r, int psi,
                                   const std::vector<double>& reliabilities) {
  Scenario s;
  s.demand = {k, r, psi};
  s.classes.push_back(expand_preset(active, k, reliabilities, s.hierarchy));
  s.classes.push_back(expand_preset(backup, r, reliabilities, s.hierarchy));
  return s;
}

/// Three active sub-SFCs and one backup, each in its own class: class 1 in one
/// server, class 2 in one rack on separate servers, class 3 in one DC on
/// separate racks, class 4 fully disjoint. Classes 1-2 share a rack and
/// classes 1-3 share a DC.
inline Scenario staggered_scenario(int psi, const std::vector<double>& reliabilities) {
  Scenario s;
  s.demand = {3, 1, psi};
  for (int delta = 1; delta <= 4; ++delta)
    s.classes.push_back({1, {1, 1, 1, 1}, delta, reliabilities});
  s.common_roots = {{1, {1, 2, 3}}, {2, {1, 2}}};
  return s;
}

struct SweepCell {
  std::optional<double> value;  // empty when skipped
  std::string note;
};

namespace detail {
inline SweepCell evaluate_cell(const Scenario& s, std::uint64_t budget) {
  try {
    EvalOptions options;
    options.term_budget = budget;
    return {reliability_general(s, options).value, {}};
  } catch (const TermBudgetExceeded&) {
    return {std::nullopt, "skipped: budget"};
  }
}

inline std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16g", v);
  return buf;
}

inline std::string csv_cell(const SweepCell& cell) {
  return cell.value ? format_value(*cell.value) : cell.note;
}
}  // namespace detail

struct Table2Row {
  PlacementPreset preset;
  std::string label;
  int case_id = 1;
  int psi = 4;
  int r = 0;
  SweepCell cell;
};

/// k = 1, one class, all 16 placements.
inline std::vector<Table2Row> run_table2(const SweepSpec& spec) {
  const auto profile = case_profile(spec.case_id);
  const int k = spec.k_list.empty() ? 1 : spec.k_list.front();
  std::vector<Table2Row> rows;
  for (const auto& preset : all_presets())
    for (int psi : spec.psi_list)
      for (int r : spec.r_list) {
        Table2Row row{preset, placement_label(preset), spec.case_id, psi, r, {}};
        row.cell = detail::evaluate_cell(single_class_scenario(preset, k, r, psi, profile),
                                         spec.term_budget);
        rows.push_back(std::move(row));
      }
  return rows;
}

struct Table3Row {
  int k = 1;
  int r = 0;
  int psi = 4;
  SweepCell cell;

  double ratio() const { return static_cast<double>(r) / k; }
};

/// Placement (N_r=4, Δ=1), backups r = 0 .. floor(11k/8) per k.
inline std::vector<Table3Row> run_table3(const SweepSpec& spec) {
  const auto profile = case_profile(spec.case_id);
  std::vector<Table3Row> rows;
  for (int psi : spec.psi_list)
    for (int k : spec.k_list) {
      std::vector<int> rs = spec.r_list;
      if (rs.empty())
        for (int r = 0; r <= 11 * k / 8; ++r) rs.push_back(r);
      for (int r : rs) {
        Table3Row row{k, r, psi, {}};
        row.cell = detail::evaluate_cell(single_class_scenario({4, 1}, k, r, psi, profile),
                                         spec.term_budget);
        rows.push_back(std::move(row));
      }
    }
  return rows;
}

struct Table4Row {
  PlacementPreset active;
  PlacementPreset backup;
  SweepCell cell;
};

/// Two classes (actives, backups) over all active placements and backup N_r ∈ {4, 3}.
inline std::vector<Table4Row> run_table4(const SweepSpec& spec) {
  const auto profile = case_profile(spec.case_id);
  const int k = spec.k_list.empty() ? 4 : spec.k_list.front();
  const int r = spec.r_list.empty() ? 3 : spec.r_list.front();
  const int psi = spec.psi_list.empty() ? 4 : spec.psi_list.front();
  std::vector<Table4Row> rows;
  for (const auto& active : all_presets())
    for (int backup_nr : {4, 3})
      for (int backup_delta = 1; backup_delta <= 4; ++backup_delta) {
        Table4Row row{active, {backup_nr, backup_delta}, {}};
        row.cell = detail::evaluate_cell(
            two_class_scenario(active, row.backup, k, r, psi, profile), spec.term_budget);
        rows.push_back(std::move(row));
      }
  return rows;
}

inline std::string table2_csv(const std::vector<Table2Row>& rows) {
  std::ostringstream out;
  out << "nr,delta,placement,case,psi,r,value\n";
  for (const auto& row : rows)
    out << row.preset.nr << ',' << row.preset.delta << ",\"" << row.label << "\","
        << row.case_id << ',' << row.psi << ',' << row.r << ',' << detail::csv_cell(row.cell)
        << '\n';
  return out.str();
}

inline std::string table3_csv(const std::vector<Table3Row>& rows) {
  std::ostringstream out;
  out << "r_over_k,k,psi,r,value\n";
  for (const auto& row : rows)
    out << detail::format_value(row.ratio()) << ',' << row.k << ',' << row.psi << ',' << row.r
        << ',' << detail::csv_cell(row.cell) << '\n';
  return out.str();
}

inline std::string table4_csv(const std::vector<Table4Row>& rows) {
  std::ostringstream out;
  out << "active_nr,active_delta,backup_nr,backup_delta,value\n";
  for (const auto& row : rows)
    out << row.active.nr << ',' << row.active.delta << ',' << row.backup.nr << ','
        << row.backup.delta << ',' << detail::csv_cell(row.cell) << '\n';
  return out.str();
}

/// Runs the sweep named by spec.table and renders it as CSV.
inline std::string run_sweep_csv(const SweepSpec& spec) {
  switch (spec.table) {
    case 2: return table2_csv(run_table2(spec));
    case 3: return table3_csv(run_table3(spec));
    case 4: return table4_csv(run_table4(spec));
  }
  throw std::invalid_argument("unknown table " + std::to_string(spec.table));
}

inline constexpr double kExhaustiveAgreement = 1e-10;

struct VerifyOptions {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 42;
  std::size_t exhaustive_cap = kDefaultExhaustiveCap;
  std::uint64_t term_budget = kDefaultTermBudget;
  unsigned workers = 0;
  // Analytic engine under test; reliability_general when empty.
  std::function<double(const Scenario&)> analytic;
};

struct VerifyReport {
  double analytic = 0.0;
  std::optional<double> exhaustive;
  McEstimate monte_carlo;
  bool exhaustive_agrees = true;  // vacuously true when not computed
  bool within_ci = false;
  std::size_t node_count = 0;

  bool passed() const { return exhaustive_agrees && within_ci; }
};

inline VerifyReport verify(const Scenario& scenario, const VerifyOptions& options = {}) {
  require_valid(scenario);
  VerifyReport report;
  if (options.analytic) {
    report.analytic = options.analytic(scenario);
  } else {
    EvalOptions eval;
    eval.term_budget = options.term_budget;
    report.analytic = reliability_general(scenario, eval).value;
  }

  const ComponentTree tree = instantiate_tree(scenario);
  report.node_count = tree.size();
  if (tree.size() <= options.exhaustive_cap) {
    report.exhaustive = exhaustive_reliability(tree, scenario.demand, options.exhaustive_cap);
    report.exhaustive_agrees =
        std::fabs(report.analytic - *report.exhaustive) <= kExhaustiveAgreement;
  }
  report.monte_carlo = monte_carlo_estimate(tree, scenario.demand, options.trials, options.seed,
                                            options.workers);
  report.within_ci = report.monte_carlo.contains(report.analytic);
  return report;
}

}  // namespace sfcrel
