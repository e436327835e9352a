#include "morita/kernels.hpp"

namespace morita::kernels {

namespace {

void axpy_scalar(std::size_t n, cd a, const cd* x, cd* y) {
    if (a == cd{0.0, 0.0}) return;
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

cd dotc_scalar(std::size_t n, const cd* x, const cd* y) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

double nrm2sq_scalar(std::size_t n, const cd* x) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return s;
}

void scal_scalar(std::size_t n, cd a, cd* x) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void rot2_scalar(std::size_t n, cd* x, cd* y, cd a, cd b, cd c, cd d) {
    for (std::size_t i = 0; i < n; ++i) {
        const cd xi = x[i];
        const cd yi = y[i];
        x[i] = a * xi + b * yi;
        y[i] = c * xi + d * yi;
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{axpy_scalar, dotc_scalar, nrm2sq_scalar, scal_scalar, rot2_scalar,
                         "scalar"};
    return ops;
}

}  // namespace morita::kernels
