// kernels.cpp - runtime selection of the active kernel set

#include "sxc/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace sxc::kern {

namespace {

std::atomic<const Ops*> forced{nullptr};

const Ops* choose() {
    if (const char* env = std::getenv("SXC_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_ops();
        if (std::strcmp(env, "avx2") == 0 && avx2_ops()) return avx2_ops();
        // unknown or unavailable value falls through to auto
    }
    if (const Ops* v = avx2_ops()) return v;
    return &scalar_ops();
}

} // namespace

const Ops& ops() {
    if (const Ops* f = forced.load(std::memory_order_relaxed)) return *f;
    static const Ops* selected = choose();
    return *selected;
}

void override_ops(const Ops* f) { forced.store(f, std::memory_order_relaxed); }

} // namespace sxc::kern
