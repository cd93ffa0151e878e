#pragma once

// Fields over spacetime and the differentiation backends that act on them.
//
// A field is a value callback plus an optional analytic-derivative callback
// taking a multi-index (counts of d/dt, d/dx, d/dy, d/dz). The analytic
// backend only ever calls the derivative callback; the finite-difference
// backends only ever call the value callback and nest 1-D central stencils.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string_view>
#include <utility>

#include "cqrel/algebra.hpp"
#include "cqrel/errors.hpp"
#include "cqrel/minkowski.hpp"

namespace cqrel {

enum Axis : std::size_t { kT = 0, kX = 1, kY = 2, kZ = 3 };

/// Partial-derivative multi-index: counts[a] derivatives along axis a.
struct MultiIndex {
    std::array<std::uint8_t, 4> counts{};

    constexpr MultiIndex() = default;
    constexpr MultiIndex(int t, int x, int y, int z)
        : counts{static_cast<std::uint8_t>(t), static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y),
                 static_cast<std::uint8_t>(z)} {}

    static constexpr MultiIndex along(std::size_t axis) {
        MultiIndex m;
        m.counts[axis] = 1;
        return m;
    }

    constexpr int order() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
    constexpr int operator[](std::size_t axis) const { return counts[axis]; }

    constexpr MultiIndex plus(std::size_t axis) const {
        MultiIndex m = *this;
        ++m.counts[axis];
        return m;
    }
    constexpr MultiIndex operator+(const MultiIndex& o) const {
        MultiIndex m;
        for (std::size_t a = 0; a < 4; ++a) m.counts[a] = static_cast<std::uint8_t>(counts[a] + o.counts[a]);
        return m;
    }
    constexpr bool operator==(const MultiIndex&) const = default;
};

template <class T>
class Field {
  public:
    using ValueFn = std::function<T(const Event&)>;
    using DerivFn = std::function<T(const Event&, const MultiIndex&)>;

    Field() : Field([](const Event&) { return T{}; }, [](const Event&, const MultiIndex&) { return T{}; }) {}
    explicit Field(ValueFn value, DerivFn deriv = {})
        : value_(std::make_shared<ValueFn>(std::move(value))),
          deriv_(deriv ? std::make_shared<DerivFn>(std::move(deriv)) : nullptr) {}

    T operator()(const Event& e) const { return (*value_)(e); }

    bool has_analytic() const { return deriv_ != nullptr; }

    /// Analytic partial derivative. Order zero returns the value.
    T analytic(const Event& e, const MultiIndex& m) const {
        if (m.order() == 0) return (*this)(e);
        if (!deriv_) throw BackendUnavailable("field has no analytic derivatives");
        return (*deriv_)(e, m);
    }

  private:
    std::shared_ptr<const ValueFn> value_;
    std::shared_ptr<const DerivFn> deriv_;
};

using ScalarField = Field<double>;
using CQField = Field<CQNumber>;

/// A 3-vector field as three scalar components.
using VectorField = std::array<ScalarField, 3>;

enum class DiffMode { kAnalytic, kCentral2, kCentral4 };

std::string_view mode_name(DiffMode mode);

/// Parses "analytic", "fd2" or "fd4". Throws std::invalid_argument.
DiffMode parse_mode(std::string_view name);

/// Order of accuracy of a finite-difference mode (0 for analytic).
int stencil_order(DiffMode mode);

struct DiffBackend {
    DiffMode mode = DiffMode::kAnalytic;
    double h = 1e-3;

    static DiffBackend analytic() { return {DiffMode::kAnalytic, 1e-3}; }
    static DiffBackend central2(double step = 1e-3) { return {DiffMode::kCentral2, step}; }
    static DiffBackend central4(double step = 1e-3) { return {DiffMode::kCentral4, step}; }

    template <class T>
    T derivative(const Field<T>& f, const Event& e, const MultiIndex& m) const;

    template <class T>
    T partial(const Field<T>& f, const Event& e, std::size_t axis) const {
        return derivative(f, e, MultiIndex::along(axis));
    }
};

namespace detail {

template <class T>
T lincomb(double a, const T& x, double b, const T& y) {
    if constexpr (std::is_same_v<T, double>) {
        return a * x + b * y;
    } else {
        return scale(x, a) + scale(y, b);
    }
}

// Applies the stencil along the first axis with a non-zero count, recursing on
// the remaining multi-index. Translation-invariant stencils commute, so the
// axis order does not matter in exact arithmetic.
template <class T>
T finite_difference(const Field<T>& f, Event e, MultiIndex m, DiffMode mode, double h) {
    if (m.order() == 0) return f(e);
    std::size_t axis = 0;
    while (m.counts[axis] == 0) ++axis;
    --m.counts[axis];
    auto at = [&](double delta) { return finite_difference(f, shifted(e, axis, delta), m, mode, h); };
    if (mode == DiffMode::kCentral2) {
        return lincomb(0.5 / h, at(h), -0.5 / h, at(-h));
    }
    // (-f(+2h) + 8 f(+h) - 8 f(-h) + f(-2h)) / 12h
    const T near = lincomb(8.0 / (12.0 * h), at(h), -8.0 / (12.0 * h), at(-h));
    const T far = lincomb(-1.0 / (12.0 * h), at(2.0 * h), 1.0 / (12.0 * h), at(-2.0 * h));
    return lincomb(1.0, near, 1.0, far);
}

}  // namespace detail

template <class T>
T DiffBackend::derivative(const Field<T>& f, const Event& e, const MultiIndex& m) const {
    if (mode == DiffMode::kAnalytic) return f.analytic(e, m);
    return detail::finite_difference(f, e, m, mode, h);
}

// Field combinators. Derivatives of the result are available analytically
// whenever they are available for every input.

ScalarField constant_field(double value);
ScalarField sum(const ScalarField& a, const ScalarField& b);
ScalarField scaled(const ScalarField& a, double s);

/// d/d(axis) of f, computed through the backend. The result's own analytic
/// derivatives are the backend's derivatives of f one order higher.
ScalarField differentiated(const ScalarField& f, std::size_t axis, const DiffBackend& backend);

/// Promotes a real scalar field to a CQ field (value in the 1 component).
CQField to_cq(const ScalarField& f);

}  // namespace cqrel
