// This file is part of lrlab, a desk-scale lab for rank-adaptive low-rank training.
// SPDX-License-Identifier: Apache-2.0

#include "lrlab/kernels.hpp"

namespace lrlab::kernels::scalar_impl {

double dot(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale(double a, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void gemm_nn(const double* a, const double* b, double* c,
             std::size_t n, std::size_t k, std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * m;
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = arow[p];
            const double* brow = b + p * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += aip * brow[j];
        }
    }
}

void gemm_tn(const double* a, const double* b, double* c,
             std::size_t n, std::size_t k, std::size_t m) {
    for (std::size_t p = 0; p < k; ++p) {
        const double* arow = a + p * n;
        const double* brow = b + p * m;
        for (std::size_t i = 0; i < n; ++i) {
            const double api = arow[i];
            double* crow = c + i * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += api * brow[j];
        }
    }
}

void gemm_nt(const double* a, const double* b, double* c,
             std::size_t n, std::size_t k, std::size_t m) {
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * m;
        for (std::size_t j = 0; j < m; ++j) {
            crow[j] += dot(arow, b + j * k, k);
        }
    }
}

}  // namespace lrlab::kernels::scalar_impl

namespace lrlab::kernels {

const kernel_table& scalar() {
    static const kernel_table table = {
        scalar_impl::dot,    scalar_impl::axpy,    scalar_impl::scale,
        scalar_impl::gemm_nn, scalar_impl::gemm_tn, scalar_impl::gemm_nt,
        "scalar",
    };
    return table;
}

}  // namespace lrlab::kernels
