#include "morita/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "morita/errors.hpp"

namespace morita::kernels {

#if defined(MORITA_WITH_AVX2)
const Ops* avx2_ops_raw();  // kernels_avx2.cpp
#endif

const Ops* avx2_ops() {
#if defined(MORITA_WITH_AVX2)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return avx2_ops_raw();
#endif
    return nullptr;
}

namespace {

std::atomic<const Ops*> g_active{nullptr};

const Ops* pick() {
    if (const char* env = std::getenv("MORITA_KERNELS")) {
        const std::string want(env);
        if (want == "scalar") return &scalar_ops();
        if (want == "avx2") {
            if (const Ops* ops = avx2_ops()) return ops;
            return &scalar_ops();  // requested but unavailable; degrade quietly
        }
    }
    if (const Ops* ops = avx2_ops()) return ops;
    return &scalar_ops();
}

}  // namespace

const Ops& active() {
    const Ops* ops = g_active.load(std::memory_order_acquire);
    if (!ops) {
        ops = pick();
        g_active.store(ops, std::memory_order_release);
    }
    return *ops;
}

void force(std::string_view name) {
    if (name == "scalar") {
        g_active.store(&scalar_ops(), std::memory_order_release);
        return;
    }
    if (name == "avx2") {
        if (const Ops* ops = avx2_ops()) {
            g_active.store(ops, std::memory_order_release);
            return;
        }
        fail(ErrorKind::InvalidInput, "avx2 kernels not available on this machine");
    }
    fail(ErrorKind::InvalidInput, "unknown kernel implementation: " + std::string(name));
}

}  // namespace morita::kernels
