#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qsynth/cost_grad.hpp"
#include "qsynth/exact.hpp"

namespace qsynth {

struct OptimizerConfig {
    int memory = 10;
    double grad_tol = 1e-6;      // max-norm of the unconstrained gradient
    double rel_cost_tol = 1e-10; // relative cost change, sustained over cost_window iterations
    int cost_window = 5;
    int max_iters = 2000;
    double c1 = 1e-4;
    double c2 = 0.9;
    int max_ls_steps = 40; // objective evaluations per line search
    double bound = 1.0;    // J_max box for couplings and fields
};

enum class OptStatus {
    ConvergedGrad,
    ConvergedCost,
    MaxIters,
    LineSearchFailure,
    NumericalFailure,
};

std::string to_string(OptStatus s);

struct OptimizerTrace {
    std::vector<IterationMetrics> iterations; // iteration 0 row always present
    OptStatus status = OptStatus::MaxIters;
    std::vector<double> final_u;     // unconstrained coordinates
    std::vector<double> final_theta; // bounded packed parameters
    double final_cost = 0.0;
};

// theta = bound * tanh(u); inverse requires |theta| < bound strictly. The
// vector forms apply an independent bound per entry (strategy stages may cap
// a subset of the couplings more tightly than J_max).
std::vector<double> reparam_forward(const std::vector<double>& u, double bound);
std::vector<double> reparam_inverse(const std::vector<double>& theta, double bound);
std::vector<double> reparam_forward(const std::vector<double>& u,
                                    const std::vector<double>& bounds);
std::vector<double> reparam_inverse(const std::vector<double>& theta,
                                    const std::vector<double>& bounds);

// Objective: fills grad, returns value. Metrics hook: called once per accepted
// iterate (and for the starting point) with the gradient in unconstrained
// coordinates; it sees the objective's most recent evaluation.
using ObjectiveFn = std::function<double(const std::vector<double>&, std::vector<double>&)>;
using MetricsFn =
    std::function<IterationMetrics(int iteration, double f, const std::vector<double>& grad,
                                   double wall_ms)>;

// Two-loop-recursion L-BFGS with a strong-Wolfe cubic-interpolation line
// search, generic over the objective (used directly by tests on toy functions).
OptimizerTrace minimize_raw(std::vector<double> u0, const ObjectiveFn& fn,
                            const OptimizerConfig& cfg, const MetricsFn& metrics = {});

// Quantum objective: C as a function of u through theta = bound*tanh(u), with
// the chain-rule Jacobian applied to the packed gradient. Per-iteration metrics
// are computed against `sol` (the instance's exact ground-state data). The
// `bounds` overload boxes each packed entry separately; sizes must match.
OptimizerTrace minimize(const SolverParams& initial, const ProblemInstance& inst,
                        const AnsatzSpec& spec, const OptimizerConfig& cfg,
                        const ExactSolution& sol);
OptimizerTrace minimize(const SolverParams& initial, const ProblemInstance& inst,
                        const AnsatzSpec& spec, const OptimizerConfig& cfg,
                        const ExactSolution& sol, const std::vector<double>& bounds);

} // namespace qsynth
