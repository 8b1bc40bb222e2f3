#pragma once

#include <vector>

#include "qsynth/exact.hpp"
#include "qsynth/propagator.hpp"

namespace qsynth {

struct CostEvaluation {
    double cost = 0.0;
    std::vector<double> gradient; // dC/dtheta in packed (bounded) coordinates
    StateVector state;
};

// H_p |psi> accumulated term by term (no dense matrix needed).
StateVector apply_problem(const ProblemInstance& inst, const StateVector& psi);

// <psi(theta)| H_p |psi(theta)>.
double cost(const SolverParams& params, const ProblemInstance& inst, const AnsatzSpec& spec);

// Cost plus the exact gradient for every packed parameter, via the spectral
// divided-difference derivative of each layer's propagator; one
// eigendecomposition per layer, shared with the forward pass.
CostEvaluation gradient(const SolverParams& params, const ProblemInstance& inst,
                        const AnsatzSpec& spec);

// Central finite differences of cost, step h per coordinate (verification
// oracle; O(#params) cost evaluations).
std::vector<double> gradient_fd(const SolverParams& params, const ProblemInstance& inst,
                                const AnsatzSpec& spec, double step = 1e-5);

// Same evaluations against a fixed instance; reuses the packed layout so the
// optimizer can work on flat vectors.
class CostEvaluator {
  public:
    CostEvaluator(ProblemInstance inst, AnsatzSpec spec, double bound);

    double cost(const std::vector<double>& theta) const;
    CostEvaluation evaluate(const std::vector<double>& theta) const;

    const ProblemInstance& instance() const { return inst_; }
    const AnsatzSpec& spec() const { return spec_; }
    double bound() const { return bound_; }
    std::size_t parameter_count() const;

  private:
    ProblemInstance inst_;
    AnsatzSpec spec_;
    double bound_;
};

} // namespace qsynth
