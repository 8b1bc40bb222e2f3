#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

// Data-parallel kernels on 2^n-dimensional state vectors and dense
// row-major operators. Every kernel exists twice: the default OpenMP
// variant in qsynth::kernels and a plain-loop reference in
// qsynth::kernels::serial. Tests check the two agree; bench/ times them.
//
// Basis convention: qubit 0 is the most significant bit of the basis
// index, so site i corresponds to bit (n-1-i) and its flip mask is
// 1 << (n-1-i). A row-major operator A stores <r|A|c> at A[r*dim + c].
//
// Reductions are implemented with static partitioning and an ordered
// per-thread combine so results are bit-identical across repeated runs
// with a fixed thread count.

namespace qsynth::kernels {

using cplx = std::complex<double>;

enum class Axis : int { X = 0, Y = 1, Z = 2 };

/// A += coeff * sigma_i^axis sigma_j^axis, dim = 2^n. One entry per row.
void add_pauli_pair(cplx* a, int n, int i, int j, Axis axis, double coeff);

/// A += coeff * sigma_i^axis.
void add_pauli_site(cplx* a, int n, int i, Axis axis, double coeff);

/// y += coeff * (sigma_i^axis sigma_j^axis) x.
void apply_pauli_pair(cplx* y, const cplx* x, int n, int i, int j, Axis axis, double coeff);

/// y += coeff * sigma_i^axis x.
void apply_pauli_site(cplx* y, const cplx* x, int n, int i, Axis axis, double coeff);

/// x[a] *= exp(-i * lambda[a] * t), a = 0..dim-1.
void phase_evolve(cplx* x, const double* lambda, double t, std::size_t dim);

/// Conjugated first-divided-difference weight matrix of exp(-i lambda t):
///   M[a*dim+b] = w[a] * conj(G(lambda_a, lambda_b)) * conj(v[b])
/// where G(p,q) = (e^{-ipt} - e^{-iqt}) / (p - q) off the diagonal and the
/// confluent limit -i t e^{-ipt} on it. |p - q| < degenerate_tol switches
/// to the limit formula evaluated at the midpoint.
void loewner_weights(cplx* m, const double* lambda, const cplx* w, const cplx* v, double t,
                     std::size_t dim, double degenerate_tol = 1e-12);

/// sum_c s(c) * conj(K[(c^mask)*dim + c]) for the Pauli pair term
/// sigma_i^axis sigma_j^axis with per-column amplitude s(c).
cplx pair_term_contraction(const cplx* k, int n, int i, int j, Axis axis);

/// Same for the single-site term sigma_i^axis.
cplx site_term_contraction(const cplx* k, int n, int i, Axis axis);

/// Squared 2-norm of x.
double norm_squared(const cplx* x, std::size_t dim);

/// <x|y> with x conjugated.
cplx inner_product(const cplx* x, const cplx* y, std::size_t dim);

// Serial reference implementations, kept for tests and the benchmark.
namespace serial {

void add_pauli_pair(cplx* a, int n, int i, int j, Axis axis, double coeff);
void add_pauli_site(cplx* a, int n, int i, Axis axis, double coeff);
void apply_pauli_pair(cplx* y, const cplx* x, int n, int i, int j, Axis axis, double coeff);
void apply_pauli_site(cplx* y, const cplx* x, int n, int i, Axis axis, double coeff);
void phase_evolve(cplx* x, const double* lambda, double t, std::size_t dim);
void loewner_weights(cplx* m, const double* lambda, const cplx* w, const cplx* v, double t,
                     std::size_t dim, double degenerate_tol = 1e-12);
cplx pair_term_contraction(const cplx* k, int n, int i, int j, Axis axis);
cplx site_term_contraction(const cplx* k, int n, int i, Axis axis);
double norm_squared(const cplx* x, std::size_t dim);
cplx inner_product(const cplx* x, const cplx* y, std::size_t dim);

/// Plain triple-loop matrix product C = A * B (row-major, dim x dim);
/// reference for the BLAS-backed path in blas.hpp.
void matmul(cplx* c, const cplx* a, const cplx* b, std::size_t dim);

} // namespace serial

} // namespace qsynth::kernels
