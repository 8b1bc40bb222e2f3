#pragma once

#include <complex>
#include <cstddef>

// Thin wrappers around CBLAS/LAPACKE for square row-major complex matrices,
// so the defines needed by the C headers stay out of the rest of the code.
namespace qsynth::blas {

using cplx = std::complex<double>;

// c = op(a) * op(b); op is the conjugate transpose when the flag is set.
void zgemm(cplx* c, const cplx* a, const cplx* b, std::size_t dim, bool conj_a = false,
           bool conj_b = false);

// y = op(a) * x.
void zgemv(cplx* y, const cplx* a, const cplx* x, std::size_t dim, bool conj_a = false);

// In-place Hermitian eigendecomposition: on return w holds the eigenvalues in
// ascending order and a[r*dim + k] is component r of the k-th eigenvector.
// Throws std::runtime_error if the backend reports failure.
void zheevd(cplx* a, double* w, std::size_t dim);

} // namespace qsynth::blas
