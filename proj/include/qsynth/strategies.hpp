#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsynth/lbfgs.hpp"

namespace qsynth {

enum class StrategyKind { Cold, WarmSize, Incremental, Combo };

std::string to_string(StrategyKind kind);
StrategyKind strategy_from_string(const std::string& name);

enum class RampKind { Linear, Geometric };

// What the ramp scale multiplies: the problem Hamiltonian's couplings (weakly
// coupled targets have near-product ground states), or the solver parameters'
// box bound (the expressible unitary set grows with the cap).
enum class RampTarget { Problem, Solver };

std::string to_string(RampTarget t);
RampTarget ramp_target_from_string(const std::string& name);

struct StrategyConfig {
    StrategyKind kind = StrategyKind::Cold;
    int start_n = 2;                   // first size for size-growing strategies
    int ramp_steps = 5;                // K
    RampKind ramp_kind = RampKind::Linear;
    std::vector<double> ramp_schedule; // when empty, make_ramp_schedule(ramp_steps, ramp_kind)
    RampTarget ramp_target = RampTarget::Problem;
    double init_scale_new = 0.1;       // |u| range for newly introduced parameters
    double cold_init_scale = 0.5;      // |u| range for cold initialization
    Fiducial fiducial = Fiducial::ZeroProduct;
    int layers = 1;
    std::uint64_t run_seed = 0;
};

struct StageRecord {
    std::string label; // "n=<m>,s=<scale>"
    int n = 0;
    double scale = 1.0;
    OptimizerTrace trace;
};

struct StrategyRun {
    StrategyKind kind = StrategyKind::Cold;
    std::vector<StageRecord> stages;
    SolverParams final_params;
    IterationMetrics final_metrics;
    OptStatus final_status = OptStatus::MaxIters;
    int total_iterations = 0;       // accepted optimizer steps summed over stages
    int final_stage_iterations = 0;
    double final_e_gs = 0.0;        // exact ground energy of the full problem
    bool final_degenerate = false;
};

// linear: k/K for k=1..K; geometric: r^(K-k) with s_1 = 0.05, s_K = 1.
std::vector<double> make_ramp_schedule(int steps, RampKind kind);

// Sub-instances of sizes start_n..n, each induced from the full instance so the
// warm-start stages optimize a consistent growing problem.
std::vector<ProblemInstance> nested_family(const ProblemInstance& inst, int start_n);

// The four schedules. The run RNG is seeded with cfg.run_seed and consumed in a
// fixed order: the first stage's initialization draws (packed parameter order),
// then, whenever the size grows, draws for the newly introduced parameters in
// packed order. Parameter transfer between stages copies values bit-for-bit.
StrategyRun run_cold(const ProblemInstance& inst, const StrategyConfig& cfg,
                     const OptimizerConfig& opt_cfg);
StrategyRun run_warm_size(const ProblemInstance& inst, const StrategyConfig& cfg,
                          const OptimizerConfig& opt_cfg);
StrategyRun run_incremental(const ProblemInstance& inst, const StrategyConfig& cfg,
                            const OptimizerConfig& opt_cfg);
StrategyRun run_combo(const ProblemInstance& inst, const StrategyConfig& cfg,
                      const OptimizerConfig& opt_cfg);
StrategyRun run_strategy(const ProblemInstance& inst, const StrategyConfig& cfg,
                         const OptimizerConfig& opt_cfg);

} // namespace qsynth
