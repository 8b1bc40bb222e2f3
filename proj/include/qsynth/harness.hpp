#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsynth/io.hpp"

namespace qsynth {

struct ExperimentConfig {
    std::string topology = "chain"; // chain | complete | edge-list (via edges_file)
    std::string edges_file;
    int n = 4;
    std::uint64_t seed = 1; // instance i uses seed + i; the run RNG reuses the instance seed
    double j_max = 1.0;
    int samples = 100;
    std::vector<StrategyKind> strategies{StrategyKind::Cold};
    StrategyConfig strategy; // schedule knobs shared by all runs (kind/seed set per run)
    OptimizerConfig opt;
    std::string out_dir = "out";
    int workers = 1;
    bool real_timing = false; // when set, trace CSVs carry measured wall_ms
    // solve-only: decouple the run RNG from the instance seed (restarts)
    bool override_run_seed = false;
    std::uint64_t run_seed = 0;
};

struct RunRecord {
    std::string run_id;
    StrategyKind kind = StrategyKind::Cold;
    int instance_index = 0;
    bool ok = false;
    std::string error;
    OptStatus status = OptStatus::MaxIters;
    IterationMetrics final_metrics;
    int total_iterations = 0;
    int final_stage_iterations = 0;
    std::vector<IterationMetrics> final_stage_rows;
};

struct StrategyStats {
    int runs = 0;
    int failures = 0;
    std::vector<double> fidelities, delta_es, betas, final_iters; // completed runs only
};

double vec_mean(const std::vector<double>& v);
double vec_median(std::vector<double> v);
double vec_min(const std::vector<double>& v);
double vec_max(const std::vector<double>& v);

struct BatchResult {
    std::vector<RunRecord> records;
    std::vector<std::pair<std::string, StrategyStats>> by_strategy; // config order
    int failures = 0;
};

InteractionGraph make_graph(const ExperimentConfig& cfg);
ProblemInstance make_instance(const ExperimentConfig& cfg, int index);

// Runs one strategy on one instance, writing <out>/runs/<run_id>/{trace.csv,
// catalogue.json}. Exceptions are captured in the record, not rethrown.
RunRecord execute_run(const ProblemInstance& inst, StrategyKind kind, const ExperimentConfig& cfg,
                      int instance_index);

// All strategies x all instances (cfg.workers threads), then summary.csv and
// ensemble_means.csv under cfg.out_dir.
BatchResult run_batch(const ExperimentConfig& cfg);

void write_summary_csv(const std::string& path, const BatchResult& res);
// Final-stage traces aligned by iteration index; shorter runs carry their last
// row forward and active_count reports how many runs genuinely reached the row.
void write_ensemble_means_csv(const std::string& path, const BatchResult& res);

// Threshold expressions like "combo.mean.fidelity>=0.99" or
// "combo.median.delta_e<=1e-2" (aggregates: mean|median|min|max; metrics:
// fidelity|delta_e|beta|final_stage_iterations).
struct AssertionOutcome {
    std::string expr;
    double actual = 0;
    bool pass = false;
};
std::vector<AssertionOutcome> evaluate_assertions(const BatchResult& res,
                                                  const std::vector<std::string>& exprs);

// Max relative deviation between the analytic and central finite-difference
// gradients over random instance/parameter pairs.
double gradcheck_max_rel_err(int n, const std::string& topology, int layers, int trials,
                             std::uint64_t seed, double step = 1e-5);

} // namespace qsynth
