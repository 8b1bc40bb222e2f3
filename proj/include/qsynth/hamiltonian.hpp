#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "qsynth/graph.hpp"
#include "qsynth/kernels.hpp"

namespace qsynth {

using cplx = std::complex<double>;
using kernels::Axis;

// Dense row-major operator: a[r*dim + c] = <r|A|c>. Qubit 0 is the most
// significant bit of the basis index.
struct DenseOperator {
    std::size_t dim = 0;
    std::vector<cplx> a;

    DenseOperator() = default;
    explicit DenseOperator(std::size_t d) : dim(d), a(d * d) {}

    cplx& at(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

// Per-layer couplings (3 per edge, graph order) and local fields (3 per site).
// `bound` is the box constraint J_max shared by couplings and fields.
struct SolverParams {
    InteractionGraph graph;
    int layers = 1;
    double bound = 1.0;
    std::vector<std::vector<std::array<double, 3>>> couplings; // [layer][edge]{x,y,z}
    std::vector<std::vector<std::array<double, 3>>> fields;    // [layer][site]{x,y,z}

    static SolverParams zeros(const InteractionGraph& graph, int layers, double bound);
};

// 2x2 Pauli matrix for the axis.
DenseOperator pauli(Axis axis);

// sigma_i^axis sigma_j^axis on n qubits (identity elsewhere).
DenseOperator two_site_term(int n, int i, int j, Axis axis);

// Problem Hamiltonian: sum over edges of (scale * per-edge scale * J^a) two-site
// terms for a in {x,y,z}.
DenseOperator build_problem(const ProblemInstance& inst);

// One ansatz layer's solver Hamiltonian: coupling sum plus local fields.
DenseOperator build_solver(const SolverParams& params, int layer);

// Flat layout: per layer, edges in graph order x (x,y,z), then sites 0..n-1
// x (x,y,z). Length = layers * (3*|E| + 3*n).
std::size_t packed_size(const InteractionGraph& graph, int layers);
std::vector<double> pack(const SolverParams& params);
SolverParams unpack(const std::vector<double>& v, const InteractionGraph& graph, int layers,
                    double bound);

// max_{rc} |A_rc - conj(A_cr)|
double hermiticity_error(const DenseOperator& op);

} // namespace qsynth
