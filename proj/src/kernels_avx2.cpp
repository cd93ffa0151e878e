// AVX2 variants of the batch kernels. This translation unit is compiled with
// -mavx2 -mfma and is only entered after a runtime CPUID check.

#include "cqrel/kernels.hpp"

#if defined(CQREL_HAVE_AVX2)

#include <immintrin.h>

#include <stdexcept>

namespace cqrel::kernels::avx2 {

namespace {

struct V4 {
    __m256d v;
};

inline V4 operator+(V4 a, V4 b) { return {_mm256_add_pd(a.v, b.v)}; }
inline V4 operator-(V4 a, V4 b) { return {_mm256_sub_pd(a.v, b.v)}; }
inline V4 operator*(V4 a, V4 b) { return {_mm256_mul_pd(a.v, b.v)}; }

inline V4 load(const double* p) { return {_mm256_loadu_pd(p)}; }
inline void store(double* p, V4 a) { _mm256_storeu_pd(p, a.v); }
inline V4 broadcast(double s) { return {_mm256_set1_pd(s)}; }
inline V4 zero() { return {_mm256_setzero_pd()}; }

// Real quaternion w + xi + yj + zk, one value per lane.
struct Quat {
    V4 w, x, y, z;
};

inline Quat operator+(const Quat& a, const Quat& b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Quat operator-(const Quat& a, const Quat& b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }

inline Quat hamilton(const Quat& a, const Quat& b) {
    return {
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    };
}

// Biquaternion re + @ im. Basis order [1, @, i, j, k, @i, @j, @k] maps to
// re = (c0, c2, c3, c4), im = (c1, c5, c6, c7).
struct Biquat {
    Quat re, im;
};

inline Biquat product(const Biquat& a, const Biquat& b) {
    return {hamilton(a.re, b.re) - hamilton(a.im, b.im), hamilton(a.re, b.im) + hamilton(a.im, b.re)};
}

inline Biquat broadcast(const CQNumber& c) {
    return {{broadcast(c[kOne]), broadcast(c[kI]), broadcast(c[kJ]), broadcast(c[kK])},
            {broadcast(c[kAt]), broadcast(c[kAtI]), broadcast(c[kAtJ]), broadcast(c[kAtK])}};
}

inline Biquat load(const CQBatch& b, std::size_t n) {
    return {{load(&b.column(kOne)[n]), load(&b.column(kI)[n]), load(&b.column(kJ)[n]), load(&b.column(kK)[n])},
            {load(&b.column(kAt)[n]), load(&b.column(kAtI)[n]), load(&b.column(kAtJ)[n]),
             load(&b.column(kAtK)[n])}};
}

inline void store(CQBatch& b, std::size_t n, const Biquat& v) {
    store(&b.column(kOne)[n], v.re.w);
    store(&b.column(kI)[n], v.re.x);
    store(&b.column(kJ)[n], v.re.y);
    store(&b.column(kK)[n], v.re.z);
    store(&b.column(kAt)[n], v.im.w);
    store(&b.column(kAtI)[n], v.im.x);
    store(&b.column(kAtJ)[n], v.im.y);
    store(&b.column(kAtK)[n], v.im.z);
}

constexpr std::size_t kLanes = 4;

}  // namespace

void mul(const CQBatch& a, const CQBatch& b, CQBatch& out) {
    if (a.size() != b.size()) throw std::invalid_argument("mul: batch sizes differ");
    const std::size_t n = a.size();
    out.resize(n);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) store(out, i, product(load(a, i), load(b, i)));
    for (; i < n; ++i) out.set(i, cqrel::mul(a.get(i), b.get(i)));
}

void transform_events(const Rotor& w, const EventBatch& in, EventBatch& out) {
    const std::size_t n = in.size();
    out.resize(n);
    const Biquat left = broadcast(w.value());
    const Biquat right = broadcast(conj_both(w.value()));
    const CQNumber right_scalar = conj_both(w.value());
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        // embed(e) = @t + ix + jy + kz: re = (0, x, y, z), im = (t, 0, 0, 0).
        const Biquat q{{zero(), load(&in.column(1)[i]), load(&in.column(2)[i]), load(&in.column(3)[i])},
                       {load(&in.column(0)[i]), zero(), zero(), zero()}};
        const Biquat r = product(product(left, q), right);
        store(&out.column(0)[i], r.im.w);
        store(&out.column(1)[i], r.re.x);
        store(&out.column(2)[i], r.re.y);
        store(&out.column(3)[i], r.re.z);
    }
    for (; i < n; ++i) {
        const CQNumber q = w.value() * embed(in.get(i)) * right_scalar;
        out.set(i, {q[kAt], q[kI], q[kJ], q[kK]});
    }
}

void proper_intervals(const EventBatch& in, std::vector<double>& out) {
    const std::size_t n = in.size();
    out.resize(n);
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const V4 t = load(&in.column(0)[i]);
        const V4 x = load(&in.column(1)[i]);
        const V4 y = load(&in.column(2)[i]);
        const V4 z = load(&in.column(3)[i]);
        store(&out[i], t * t - x * x - y * y - z * z);
    }
    for (; i < n; ++i) out[i] = proper_interval(in.get(i));
}

}  // namespace cqrel::kernels::avx2

#endif  // CQREL_HAVE_AVX2
