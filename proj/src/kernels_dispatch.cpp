#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cqrel/kernels.hpp"

namespace cqrel::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(CQREL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa initial_isa() {
    if (const char* env = std::getenv("CQREL_ISA"); env != nullptr && std::string(env) == "scalar") {
        return Isa::kScalar;
    }
    return cpu_has_avx2() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) { return isa == Isa::kScalar || cpu_has_avx2(); }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (!isa_supported(isa)) throw std::invalid_argument(std::string("ISA not available: ") + std::string(isa_name(isa)));
    current().store(isa, std::memory_order_relaxed);
}

void mul(const CQBatch& a, const CQBatch& b, CQBatch& out) {
#if defined(CQREL_HAVE_AVX2)
    if (active_isa() == Isa::kAvx2) return avx2::mul(a, b, out);
#endif
    scalar::mul(a, b, out);
}

void transform_events(const Rotor& w, const EventBatch& in, EventBatch& out) {
#if defined(CQREL_HAVE_AVX2)
    if (active_isa() == Isa::kAvx2) return avx2::transform_events(w, in, out);
#endif
    scalar::transform_events(w, in, out);
}

void proper_intervals(const EventBatch& in, std::vector<double>& out) {
#if defined(CQREL_HAVE_AVX2)
    if (active_isa() == Isa::kAvx2) return avx2::proper_intervals(in, out);
#endif
    scalar::proper_intervals(in, out);
}

}  // namespace cqrel::kernels
