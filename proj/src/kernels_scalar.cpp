#include <stdexcept>

#include "cqrel/kernels.hpp"

namespace cqrel::kernels {

CQNumber CQBatch::get(std::size_t idx) const {
    CQNumber v;
    for (std::size_t b = 0; b < kBasisSize; ++b) v[b] = coeff_[b][idx];
    return v;
}

void CQBatch::set(std::size_t idx, const CQNumber& v) {
    for (std::size_t b = 0; b < kBasisSize; ++b) coeff_[b][idx] = v[b];
}

namespace scalar {

void mul(const CQBatch& a, const CQBatch& b, CQBatch& out) {
    if (a.size() != b.size()) throw std::invalid_argument("mul: batch sizes differ");
    out.resize(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) out.set(n, cqrel::mul(a.get(n), b.get(n)));
}

void transform_events(const Rotor& w, const EventBatch& in, EventBatch& out) {
    out.resize(in.size());
    const CQNumber right = conj_both(w.value());
    for (std::size_t n = 0; n < in.size(); ++n) {
        const CQNumber q = w.value() * embed(in.get(n)) * right;
        out.set(n, {q[kAt], q[kI], q[kJ], q[kK]});
    }
}

void proper_intervals(const EventBatch& in, std::vector<double>& out) {
    out.resize(in.size());
    for (std::size_t n = 0; n < in.size(); ++n) out[n] = proper_interval(in.get(n));
}

}  // namespace scalar
}  // namespace cqrel::kernels
