#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hitlab/analysis.hpp"
#include "hitlab/sampler.hpp"
#include "hitlab/solver.hpp"

namespace hitlab {

struct ExperimentConfig {
  int n = 0;
  Regime regime = Regime::explicit_lg_p(Lg(0.0L));
  std::uint64_t trials = 1;
  Seed master_seed;
  std::uint64_t node_budget = kDefaultNodeBudget;
  int workers = 1;
  std::optional<int> count_xm;  // also count hitting sets of this size per trial
  std::optional<std::string> output_stem;  // write <stem>.csv and <stem>.json
};

struct TrialRecord {
  std::uint64_t index = 0;
  Seed derived_seed;
  std::uint64_t edge_count = 0;
  int h_size = 0;
  std::uint64_t solver_nodes = 0;
  SolveStatus solver_status = SolveStatus::optimal;
  std::uint64_t elapsed_ms = 0;  // wall clock, excluded from determinism checks
  std::optional<std::uint64_t> xm;
};

struct XmStats {
  int m = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance
  double zero_fraction = 0.0;
};

struct Summary {
  std::map<int, std::uint64_t> histogram;  // h_size -> count
  int mode = 0;                            // smallest m on ties
  double two_point_mass = 0.0;  // max over m of fraction in {m, m+1}
  Window window_finite;
  std::optional<AsymptoticPrediction> prediction_asymptotic;
  std::optional<int> prediction_gap;  // |window.h_hat - prediction.h|
  double window_mass = 0.0;           // fraction inside the finite window
  std::optional<XmStats> xm;
};

// Counts hitting sets of size m by enumerating all C(n,m) subsets.
// Guarded by C(n,m) <= 1e6.
std::uint64_t count_hitting_of_size(const SetSystem& sys, int m);

// Runs config.trials seeded trials (trial i uses trial_seed(master, i)),
// solving each sampled instance exactly. Records come back in index
// order no matter how the workers were scheduled. A budget-exceeded
// solve aborts the whole experiment (BudgetExceededError): censored
// minima would bias the histogram. Writes <stem>.csv / <stem>.json
// when output_stem is set.
std::pair<std::vector<TrialRecord>, Summary> run_experiment(
    const ExperimentConfig& config);

Summary summarize(const ExperimentConfig& config,
                  const std::vector<TrialRecord>& records);

// CSV: header index,seed,edge_count,h_size,nodes,status,ms; seed as 16
// hex digits; UTF-8, LF only.
void write_csv(const std::vector<TrialRecord>& records,
               const std::filesystem::path& path);
std::string csv_string(const std::vector<TrialRecord>& records);

// JSON with a stable key order.
std::string summary_to_json(const ExperimentConfig& config, const Summary& s);

}  // namespace hitlab
