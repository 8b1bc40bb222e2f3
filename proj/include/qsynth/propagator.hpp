#pragma once

#include <vector>

#include "qsynth/hamiltonian.hpp"

namespace qsynth {

// Amplitudes in the computational basis; qubit 0 is the most significant bit.
using StateVector = std::vector<cplx>;

enum class Fiducial { ZeroProduct, PlusProduct };

struct AnsatzSpec {
    int layers = 1;
    double time = 1.0; // per-layer evolution time; fixed to 1 in experiments
    Fiducial fiducial = Fiducial::ZeroProduct;
};

// Eigenvalues ascending; eigenvectors row-major with U[r*dim + k] = <r|u_k>
// (column k is the k-th eigenvector).
struct SpectralDecomposition {
    std::size_t dim = 0;
    std::vector<double> eigenvalues;
    std::vector<cplx> eigenvectors;
};

StateVector fiducial_state(int n, Fiducial kind);

// Full Hermitian eigendecomposition; throws std::invalid_argument if the input
// deviates from Hermitian by more than herm_tol.
SpectralDecomposition spectral_decompose(const DenseOperator& h, double herm_tol = 1e-10);

// U exp(-i lambda t) U^dag psi.
StateVector propagate(const SpectralDecomposition& sd, double t, const StateVector& psi);

// Layer 1 applied first: psi = E_L ... E_2 E_1 |fiducial>.
StateVector ansatz_state(const SolverParams& params, const AnsatzSpec& spec);

// Decompositions of every layer's solver Hamiltonian (shared by the ansatz and
// the analytic gradient so each layer is diagonalized once).
std::vector<SpectralDecomposition> layer_decompositions(const SolverParams& params);

StateVector ansatz_state(const std::vector<SpectralDecomposition>& layers, const AnsatzSpec& spec,
                         int n);

} // namespace qsynth
