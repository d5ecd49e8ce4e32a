#include "hitlab/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace hitlab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string seed_hex(Seed s) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(s.master));
  return buf;
}

TrialRecord run_one_trial(const ExperimentConfig& config, std::uint64_t index) {
  TrialRecord rec;
  rec.index = index;
  rec.derived_seed = trial_seed(config.master_seed, index);
  const auto t0 = std::chrono::steady_clock::now();
  const SetSystem sys = sample_system(config.n, config.regime, rec.derived_seed);
  rec.edge_count = sys.edge_count();
  if (config.count_xm) rec.xm = count_hitting_of_size(sys, *config.count_xm);
  const SolveResult res = solve_min_hitting(sys, config.node_budget);
  rec.h_size = res.size;
  rec.solver_nodes = res.nodes;
  rec.solver_status = res.status;
  rec.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  if (res.status != SolveStatus::optimal) {
    throw BudgetExceededError(
        "trial " + std::to_string(index) + " (seed " + seed_hex(rec.derived_seed) +
        ") exceeded the node budget of " + std::to_string(config.node_budget) +
        " after " + std::to_string(res.nodes) +
        " nodes; experiment aborted to avoid censored minima");
  }
  return rec;
}

}  // namespace

std::uint64_t count_hitting_of_size(const SetSystem& sys, int m) {
  const int n = sys.n();
  if (m < 0 || m > n) throw DomainError("count_hitting_of_size: need 0 <= m <= n");
  const long double lg_count =
      lg_binomial(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m))
          .value();
  if (lg_count > std::log2(1e6L)) {
    throw DomainError("count_hitting_of_size: C(n,m) exceeds 1e6");
  }
  std::uint64_t count = 0;
  std::vector<int> comb(m);
  std::iota(comb.begin(), comb.end(), 0);
  for (;;) {
    VertexSet h(n);
    for (int v : comb) h.set(v);
    count += is_hitting(sys, h);
    int i = m - 1;
    while (i >= 0 && comb[i] == n - m + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
  }
  return count;
}

std::pair<std::vector<TrialRecord>, Summary> run_experiment(
    const ExperimentConfig& config) {
  if (config.trials < 1) throw DomainError("run_experiment: trials >= 1 required");
  if (config.workers < 1) throw DomainError("run_experiment: workers >= 1 required");

  std::vector<TrialRecord> records(config.trials);
  const int workers =
      static_cast<int>(std::min<std::uint64_t>(config.workers, config.trials));
  if (workers == 1) {
    for (std::uint64_t i = 0; i < config.trials; ++i) {
      records[i] = run_one_trial(config, i);
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto work = [&] {
      for (;;) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= config.trials || failed.load()) return;
        try {
          records[i] = run_one_trial(config, i);
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!failed.exchange(true)) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(first_error);
  }

  Summary summary = summarize(config, records);
  if (config.output_stem) {
    write_csv(records, *config.output_stem + ".csv");
    std::ofstream out(*config.output_stem + ".json", std::ios::binary);
    if (!out) throw Error("cannot open " + *config.output_stem + ".json");
    out << summary_to_json(config, summary) << "\n";
  }
  return {std::move(records), std::move(summary)};
}

Summary summarize(const ExperimentConfig& config,
                  const std::vector<TrialRecord>& records) {
  Summary s;
  for (const TrialRecord& r : records) ++s.histogram[r.h_size];
  const double total = static_cast<double>(records.size());

  std::uint64_t best_count = 0;
  for (const auto& [m, c] : s.histogram) {
    if (c > best_count) {
      best_count = c;
      s.mode = m;
    }
  }
  for (const auto& [m, c] : s.histogram) {
    const auto it = s.histogram.find(m + 1);
    const std::uint64_t pair = c + (it == s.histogram.end() ? 0 : it->second);
    s.two_point_mass = std::max(s.two_point_mass, pair / total);
  }

  s.window_finite = finite_window(curve(config.n, lg_p_of(config.regime, config.n)));
  try {
    switch (config.regime.kind()) {
      case Regime::Kind::dense:
        s.prediction_asymptotic = dense_h(config.n, config.regime.beta());
        break;
      case Regime::Kind::sparse:
        s.prediction_asymptotic = sparse_h(config.n, config.regime.alpha());
        break;
      case Regime::Kind::explicit_lg_p:
        break;
    }
  } catch (const DomainError&) {
    // Degenerate (n, parameter) corner: no asymptotic prediction.
  }
  if (s.prediction_asymptotic) {
    s.prediction_gap = std::abs(s.window_finite.h_hat - s.prediction_asymptotic->h);
  }

  std::uint64_t in_window = 0;
  for (const TrialRecord& r : records) {
    in_window += r.h_size >= s.window_finite.support_lo &&
                 r.h_size <= s.window_finite.support_hi;
  }
  s.window_mass = in_window / total;

  if (config.count_xm) {
    XmStats xs;
    xs.m = *config.count_xm;
    double mean = 0.0;
    std::uint64_t zeros = 0;
    for (const TrialRecord& r : records) {
      mean += static_cast<double>(*r.xm);
      zeros += *r.xm == 0;
    }
    mean /= total;
    double ss = 0.0;
    for (const TrialRecord& r : records) {
      const double d = static_cast<double>(*r.xm) - mean;
      ss += d * d;
    }
    xs.mean = mean;
    xs.variance = records.size() > 1 ? ss / (total - 1.0) : 0.0;
    xs.zero_fraction = zeros / total;
    s.xm = xs;
  }
  return s;
}

std::string csv_string(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  out << "index,seed,edge_count,h_size,nodes,status,ms\n";
  for (const TrialRecord& r : records) {
    out << r.index << ',' << seed_hex(r.derived_seed) << ',' << r.edge_count
        << ',' << r.h_size << ',' << r.solver_nodes << ','
        << (r.solver_status == SolveStatus::optimal ? "optimal" : "budget_exceeded")
        << ',' << r.elapsed_ms << '\n';
  }
  return out.str();
}

void write_csv(const std::vector<TrialRecord>& records,
               const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << csv_string(records);
  if (!out) throw Error("write failed for " + path.string());
}

std::string summary_to_json(const ExperimentConfig& config, const Summary& s) {
  ordered_json j;
  j["n"] = config.n;
  ordered_json regime;
  switch (config.regime.kind()) {
    case Regime::Kind::dense:
      regime["kind"] = "dense";
      regime["beta"] = config.regime.beta();
      break;
    case Regime::Kind::sparse:
      regime["kind"] = "sparse";
      regime["alpha"] = config.regime.alpha();
      break;
    case Regime::Kind::explicit_lg_p:
      regime["kind"] = "explicit";
      regime["lg_p"] =
          static_cast<double>(config.regime.explicit_value().value());
      break;
  }
  regime["lg_p_at_n"] =
      static_cast<double>(lg_p_of(config.regime, config.n).value());
  j["regime"] = regime;
  j["trials"] = config.trials;
  j["master_seed"] = seed_hex(config.master_seed);

  ordered_json hist;
  for (const auto& [m, c] : s.histogram) hist[std::to_string(m)] = c;
  j["histogram"] = hist;
  j["mode"] = s.mode;
  j["two_point_mass"] = s.two_point_mass;
  j["window"] = {{"h_hat", s.window_finite.h_hat},
                 {"support", {s.window_finite.support_lo, s.window_finite.support_hi}}};
  if (s.prediction_asymptotic) {
    ordered_json pred;
    pred["h"] = s.prediction_asymptotic->h;
    pred["phi"] = s.prediction_asymptotic->phi;
    if (s.prediction_asymptotic->delta) {
      pred["delta"] = *s.prediction_asymptotic->delta;
    }
    j["prediction"] = pred;
  } else {
    j["prediction"] = nullptr;
  }
  j["agreement"] = {
      {"prediction_gap",
       s.prediction_gap ? ordered_json(*s.prediction_gap) : ordered_json(nullptr)},
      {"window_mass", s.window_mass}};
  if (s.xm) {
    j["xm"] = {{"m", s.xm->m},
               {"mean", s.xm->mean},
               {"variance", s.xm->variance},
               {"zero_fraction", s.xm->zero_fraction}};
  } else {
    j["xm"] = nullptr;
  }
  return j.dump(2);
}

}  // namespace hitlab
