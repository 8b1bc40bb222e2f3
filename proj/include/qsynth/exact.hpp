#pragma once

#include <vector>

#include "qsynth/propagator.hpp"

namespace qsynth {

// Below this gap the ground space is treated as degenerate and fidelity is
// measured against the whole degenerate eigenspace.
constexpr double kDegeneracyTol = 1e-10;
// Division guard for beta = delta_e / ||grad||.
constexpr double kBetaGuard = 1e-14;

struct ExactSolution {
    double e_gs = 0.0;
    StateVector gs;  // first ground vector
    double gap = 0.0; // lambda_1 - lambda_0
    bool degenerate = false;
    std::vector<StateVector> ground_space; // all eigenvectors within the tolerance of e_gs

    // lambda -> s*lambda under uniform coupling scaling; eigenvectors unchanged.
    ExactSolution scaled(double s, double degeneracy_tol = kDegeneracyTol) const;
};

struct IterationMetrics {
    int iteration = 0;
    double cost = 0.0;
    double delta_e = 0.0;
    double grad_norm = 0.0; // Euclidean norm; the optimizer stops on the max-norm
    double beta = 0.0;
    double fidelity = 0.0;
    double wall_ms = 0.0;
    bool beta_guarded = false; // grad_norm fell below the division guard
};

ExactSolution ground_state(const DenseOperator& h, double degeneracy_tol = kDegeneracyTol);

// |<phi|psi>|^2
double fidelity(const StateVector& psi, const StateVector& phi);

// Squared projection of psi onto the (possibly degenerate) ground space.
double fidelity_to_ground(const StateVector& psi, const ExactSolution& sol);

double delta_e(double cost, double e_gs);

// delta_e / max(grad_norm, kBetaGuard); caller passes delta_e >= 0.
double beta(double delta_e_value, double grad_norm);

// Assembles the per-iteration record; delta_e is clamped at zero (the raw value
// can dip a few ulps below zero at convergence, which would flip beta's sign).
IterationMetrics make_metrics(int iteration, double cost, double grad_norm,
                              const StateVector& psi, const ExactSolution& sol, double wall_ms);

} // namespace qsynth
