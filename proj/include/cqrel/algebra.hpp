#pragma once

// Complex-quaternion (biquaternion) algebra C (x) H.
//
// A CQ number carries eight real coefficients over the ordered basis
//
//     [1, @, i, j, k, @i, @j, @k]
//
// where @ is the complex unit (@^2 = -1) and i, j, k are Hamilton's
// quaternion units. @ commutes with i, j and k. The coefficient order is part
// of every serialized form (JSON arrays, SoA batches) and never changes.

#include <array>
#include <cstddef>
#include <cstdint>

namespace cqrel {

enum Basis : std::size_t {
    kOne = 0,
    kAt = 1,
    kI = 2,
    kJ = 3,
    kK = 4,
    kAtI = 5,
    kAtJ = 6,
    kAtK = 7,
};

inline constexpr std::size_t kBasisSize = 8;

/// Default absolute tolerance for comparing unit-scale CQ values.
inline constexpr double kDefaultTol = 1e-12;

struct CQNumber {
    std::array<double, kBasisSize> c{};

    constexpr CQNumber() = default;
    constexpr explicit CQNumber(const std::array<double, kBasisSize>& coeffs) : c(coeffs) {}
    constexpr CQNumber(double one, double at, double i, double j, double k, double ati, double atj,
                       double atk)
        : c{one, at, i, j, k, ati, atj, atk} {}

    static constexpr CQNumber scalar(double s) { return {s, 0, 0, 0, 0, 0, 0, 0}; }
    static constexpr CQNumber unit(Basis b) {
        CQNumber r;
        r.c[b] = 1.0;
        return r;
    }

    constexpr double operator[](std::size_t idx) const { return c[idx]; }
    constexpr double& operator[](std::size_t idx) { return c[idx]; }

    constexpr bool operator==(const CQNumber&) const = default;
};

/// Signed basis product: e_a * e_b = sign * e_index.
struct BasisProduct {
    std::int8_t sign = 1;
    std::uint8_t index = 0;

    constexpr bool operator==(const BasisProduct&) const = default;
};

/// Multiplication table of the eight basis elements; the only place the
/// algebra's product is defined.
struct StructureConstants {
    std::array<std::array<BasisProduct, kBasisSize>, kBasisSize> table{};

    constexpr const BasisProduct& operator()(std::size_t a, std::size_t b) const { return table[a][b]; }
    constexpr bool operator==(const StructureConstants&) const = default;
};

namespace detail {

// Quaternion part of a basis element: 0 -> 1, 1 -> i, 2 -> j, 3 -> k.
constexpr std::size_t quat_part(std::size_t b) { return b == kOne || b == kAt ? 0 : (b <= kK ? b - 1 : b - 4); }
constexpr bool has_at(std::size_t b) { return b == kAt || b >= kAtI; }
constexpr std::size_t compose_basis(bool at, std::size_t quat) {
    if (quat == 0) return at ? kAt : kOne;
    return at ? quat + 4 : quat + 1;
}

// Hamilton's relations: i^2 = j^2 = k^2 = -1, ij = -ji = k, jk = -kj = i, ki = -ik = j.
constexpr BasisProduct quat_product(std::size_t a, std::size_t b) {
    constexpr std::array<std::array<BasisProduct, 4>, 4> t{{
        {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
        {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
        {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
        {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
    }};
    return t[a][b];
}

}  // namespace detail

/// Builds the structure constants from the generator relations: @^2 = -1,
/// Hamilton's quaternion relations, and [@, i] = [@, j] = [@, k] = 0.
constexpr StructureConstants make_structure_constants() {
    StructureConstants s;
    for (std::size_t a = 0; a < kBasisSize; ++a) {
        for (std::size_t b = 0; b < kBasisSize; ++b) {
            const bool at_a = detail::has_at(a);
            const bool at_b = detail::has_at(b);
            // @ commutes through the quaternion part, so @^m q_a @^n q_b = @^(m+n) q_a q_b.
            const BasisProduct q = detail::quat_product(detail::quat_part(a), detail::quat_part(b));
            int sign = q.sign;
            if (at_a && at_b) sign = -sign;
            s.table[a][b] = {static_cast<std::int8_t>(sign),
                             static_cast<std::uint8_t>(detail::compose_basis(at_a != at_b, q.index))};
        }
    }
    return s;
}

inline constexpr StructureConstants kStructureConstants = make_structure_constants();

constexpr CQNumber add(const CQNumber& a, const CQNumber& b) {
    CQNumber r;
    for (std::size_t n = 0; n < kBasisSize; ++n) r.c[n] = a.c[n] + b.c[n];
    return r;
}

constexpr CQNumber sub(const CQNumber& a, const CQNumber& b) {
    CQNumber r;
    for (std::size_t n = 0; n < kBasisSize; ++n) r.c[n] = a.c[n] - b.c[n];
    return r;
}

constexpr CQNumber scale(const CQNumber& a, double s) {
    CQNumber r;
    for (std::size_t n = 0; n < kBasisSize; ++n) r.c[n] = a.c[n] * s;
    return r;
}

/// Bilinear product expanded through a structure-constant table.
constexpr CQNumber mul(const CQNumber& a, const CQNumber& b,
                       const StructureConstants& table = kStructureConstants) {
    CQNumber r;
    for (std::size_t x = 0; x < kBasisSize; ++x) {
        if (a.c[x] == 0.0) continue;
        for (std::size_t y = 0; y < kBasisSize; ++y) {
            const BasisProduct& p = table(x, y);
            r.c[p.index] += p.sign * (a.c[x] * b.c[y]);
        }
    }
    return r;
}

/// Complex conjugation *: @ -> -@, i, j, k fixed.
constexpr CQNumber conj_complex(const CQNumber& a) {
    return {a.c[kOne], -a.c[kAt], a.c[kI], a.c[kJ], a.c[kK], -a.c[kAtI], -a.c[kAtJ], -a.c[kAtK]};
}

/// Quaternionic conjugation (overbar): i, j, k -> -i, -j, -k, @ fixed.
/// Reverses the order of products.
constexpr CQNumber conj_quaternion(const CQNumber& a) {
    return {a.c[kOne], a.c[kAt], -a.c[kI], -a.c[kJ], -a.c[kK], -a.c[kAtI], -a.c[kAtJ], -a.c[kAtK]};
}

/// Both conjugations; the two commute.
constexpr CQNumber conj_both(const CQNumber& a) { return conj_complex(conj_quaternion(a)); }

/// True iff a lies in the purely imaginary (Minkowski) subspace span{@, i, j, k}.
bool is_minkowski(const CQNumber& a, double tol = kDefaultTol);

/// Largest absolute coefficient.
double max_abs(const CQNumber& a);

/// max_abs(a - b).
double distance(const CQNumber& a, const CQNumber& b);

bool approx_equal(const CQNumber& a, const CQNumber& b, double tol = kDefaultTol);

constexpr CQNumber operator+(const CQNumber& a, const CQNumber& b) { return add(a, b); }
constexpr CQNumber operator-(const CQNumber& a, const CQNumber& b) { return sub(a, b); }
constexpr CQNumber operator-(const CQNumber& a) { return scale(a, -1.0); }
constexpr CQNumber operator*(const CQNumber& a, const CQNumber& b) { return mul(a, b); }
constexpr CQNumber operator*(double s, const CQNumber& a) { return scale(a, s); }
constexpr CQNumber operator*(const CQNumber& a, double s) { return scale(a, s); }

namespace units {
inline constexpr CQNumber one = CQNumber::unit(kOne);
inline constexpr CQNumber at = CQNumber::unit(kAt);
inline constexpr CQNumber i = CQNumber::unit(kI);
inline constexpr CQNumber j = CQNumber::unit(kJ);
inline constexpr CQNumber k = CQNumber::unit(kK);
}  // namespace units

}  // namespace cqrel
