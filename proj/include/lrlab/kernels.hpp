// This file is part of lrlab, a desk-scale lab for rank-adaptive low-rank training.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

// Dense double-precision inner kernels. Scalar reference implementations live
// in kernels_scalar.cpp; vectorized variants (AVX2 on x86-64, NEON on arm64)
// are selected once at startup based on runtime CPU capabilities. All variants
// compute the same result up to floating-point reassociation; the test suite
// checks scalar/vector agreement to 1e-13.

namespace lrlab::kernels {

struct kernel_table {
    double (*dot)(const double* x, const double* y, std::size_t n);
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    void (*scale)(double a, double* x, std::size_t n);
    // C(n x m) += A(n x k) * B(k x m), row-major, C pre-initialized
    void (*gemm_nn)(const double* a, const double* b, double* c,
                    std::size_t n, std::size_t k, std::size_t m);
    // C(n x m) += A(k x n)^T * B(k x m)
    void (*gemm_tn)(const double* a, const double* b, double* c,
                    std::size_t n, std::size_t k, std::size_t m);
    // C(n x m) += A(n x k) * B(m x k)^T
    void (*gemm_nt)(const double* a, const double* b, double* c,
                    std::size_t n, std::size_t k, std::size_t m);
    const char* name;
};

// Active table, chosen at load time. Stable for the lifetime of the process,
// so repeated runs on one machine are bit-reproducible.
const kernel_table& active();

// Reference table, always available (used by the equivalence tests).
const kernel_table& scalar();

// Name of the selected backend ("scalar", "avx2", "neon").
const char* backend_name();

}  // namespace lrlab::kernels
