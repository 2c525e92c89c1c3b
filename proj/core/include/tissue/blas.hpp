#pragma once

#include "tissue/rng.hpp"

namespace tissue::blas {

// C[m,n] = alpha * op(A) * op(B) + beta * C, row-major, op = optional transpose.
// k is the contraction length. Leading dimensions are the row strides of the
// stored (untransposed) matrices.
void gemm(bool trans_a, bool trans_b, int m, int n, int k, float alpha, const float* a, int lda,
          const float* b, int ldb, float beta, float* c, int ldc);
void gemm(bool trans_a, bool trans_b, int m, int n, int k, double alpha, const double* a, int lda,
          const double* b, int ldb, double beta, double* c, int ldc);

// Fills w (row-major rows x cols) with a semi-orthogonal matrix scaled by gain.
void orthogonal(float* w, int rows, int cols, Rng& rng, float gain);
void orthogonal(double* w, int rows, int cols, Rng& rng, double gain);

}  // namespace tissue::blas
