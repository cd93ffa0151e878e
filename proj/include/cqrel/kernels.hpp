#pragma once

// Batched CQ kernels over structure-of-arrays storage.
//
// Every kernel has a scalar reference implementation (built from the
// table-driven product in algebra.hpp) and, on x86-64, an AVX2 variant that
// processes four lanes per instruction from the expanded biquaternion product.
// The variant is chosen once at runtime from CPUID; CQREL_ISA=scalar in the
// environment forces the reference path.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "cqrel/algebra.hpp"
#include "cqrel/lorentz.hpp"
#include "cqrel/minkowski.hpp"

namespace cqrel::kernels {

/// n CQ numbers stored as eight coefficient columns in basis order.
class CQBatch {
  public:
    CQBatch() = default;
    explicit CQBatch(std::size_t n) { resize(n); }

    std::size_t size() const { return coeff_[0].size(); }
    void resize(std::size_t n) {
        for (auto& col : coeff_) col.resize(n);
    }

    CQNumber get(std::size_t idx) const;
    void set(std::size_t idx, const CQNumber& v);

    std::span<double> column(std::size_t basis) { return coeff_[basis]; }
    std::span<const double> column(std::size_t basis) const { return coeff_[basis]; }

  private:
    std::array<std::vector<double>, kBasisSize> coeff_;
};

/// n events stored as t, x, y, z columns.
class EventBatch {
  public:
    EventBatch() = default;
    explicit EventBatch(std::size_t n) { resize(n); }

    std::size_t size() const { return coord_[0].size(); }
    void resize(std::size_t n) {
        for (auto& col : coord_) col.resize(n);
    }

    Event get(std::size_t idx) const { return {coord_[0][idx], coord_[1][idx], coord_[2][idx], coord_[3][idx]}; }
    void set(std::size_t idx, const Event& e) {
        for (std::size_t a = 0; a < 4; ++a) coord_[a][idx] = e[a];
    }

    std::span<double> column(std::size_t axis) { return coord_[axis]; }
    std::span<const double> column(std::size_t axis) const { return coord_[axis]; }

  private:
    std::array<std::vector<double>, 4> coord_;
};

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// True if the variant was compiled in and the CPU supports it.
bool isa_supported(Isa isa);

/// Variant used by the dispatching entry points.
Isa active_isa();

/// Overrides the runtime choice. Throws std::invalid_argument if unsupported.
void set_active_isa(Isa isa);

// Dispatching entry points. Output batches are resized to match the input.
// Preconditions: paired inputs have equal size (std::invalid_argument otherwise).
void mul(const CQBatch& a, const CQBatch& b, CQBatch& out);
void transform_events(const Rotor& w, const EventBatch& in, EventBatch& out);
void proper_intervals(const EventBatch& in, std::vector<double>& out);

namespace scalar {
void mul(const CQBatch& a, const CQBatch& b, CQBatch& out);
void transform_events(const Rotor& w, const EventBatch& in, EventBatch& out);
void proper_intervals(const EventBatch& in, std::vector<double>& out);
}  // namespace scalar

#if defined(CQREL_HAVE_AVX2)
namespace avx2 {
void mul(const CQBatch& a, const CQBatch& b, CQBatch& out);
void transform_events(const Rotor& w, const EventBatch& in, EventBatch& out);
void proper_intervals(const EventBatch& in, std::vector<double>& out);
}  // namespace avx2
#endif

}  // namespace cqrel::kernels
