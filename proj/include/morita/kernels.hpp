#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace morita::kernels {

using cd = std::complex<double>;

// Flat array kernels underneath all matrix arithmetic. Every entry point has
// a scalar reference implementation and, on x86-64 with AVX2+FMA, a vector
// variant selected once at startup. The two are equivalence-tested; results
// may differ in the last ulps because of FMA contraction.
struct Ops {
    // y[i] += a * x[i]
    void (*axpy)(std::size_t n, cd a, const cd* x, cd* y);
    // sum_i conj(x[i]) * y[i]
    cd (*dotc)(std::size_t n, const cd* x, const cd* y);
    // sum_i |x[i]|^2
    double (*nrm2sq)(std::size_t n, const cd* x);
    // x[i] *= a
    void (*scal)(std::size_t n, cd a, cd* x);
    // simultaneous two-row update:
    //   x[i] <- a*x[i] + b*y[i]
    //   y[i] <- c*x_old[i] + d*y[i]
    void (*rot2)(std::size_t n, cd* x, cd* y, cd a, cd b, cd c, cd d);
    const char* name;
};

const Ops& scalar_ops();

// AVX2+FMA implementation, or nullptr when the binary or CPU lacks support.
const Ops* avx2_ops();

// Active implementation. Picked on first use: AVX2 when available, unless
// the MORITA_KERNELS environment variable ("scalar" or "avx2") overrides.
const Ops& active();

// Test hook: force an implementation by name. Throws on unknown/unavailable.
void force(std::string_view name);

}  // namespace morita::kernels
