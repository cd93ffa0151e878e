#pragma once

// Spacetime events as purely imaginary CQ numbers q = @t + ix + jy + kz.
// Natural units (c = 1); metric signature (+, -, -, -).

#include <array>

#include "cqrel/algebra.hpp"

namespace cqrel {

/// Default tolerance when projecting products back onto the Minkowski subspace.
inline constexpr double kProjectTol = 1e-9;

/// Event (t, x, y, z). The same type carries energy-momentum (E, px, py, pz).
struct Event {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr double operator[](std::size_t axis) const {
        return axis == 0 ? t : axis == 1 ? x : axis == 2 ? y : z;
    }
    constexpr double& operator[](std::size_t axis) {
        return axis == 0 ? t : axis == 1 ? x : axis == 2 ? y : z;
    }
    constexpr bool operator==(const Event&) const = default;
};

constexpr Event operator+(const Event& a, const Event& b) { return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Event operator-(const Event& a, const Event& b) { return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Event operator*(double s, const Event& a) { return {s * a.t, s * a.x, s * a.y, s * a.z}; }

/// Returns e with coordinate `axis` shifted by delta.
constexpr Event shifted(Event e, std::size_t axis, double delta) {
    e[axis] += delta;
    return e;
}

constexpr CQNumber embed(const Event& e) { return {0.0, e.t, e.x, e.y, e.z, 0.0, 0.0, 0.0}; }

/// Inverse of embed. Throws NotInMinkowskiSubspace if the 1 or @e_i parts exceed tol.
Event project(const CQNumber& m, double tol = kProjectTol);

/// t^2 - x^2 - y^2 - z^2, evaluated as the real part of -q̄q.
double proper_interval(const CQNumber& q, double tol = kProjectTol);
double proper_interval(const Event& e);

/// <p, q> = -(p̄q + q̄p)/2 = Et - p.x for p, q in the Minkowski subspace.
double scalar_product(const CQNumber& p, const CQNumber& q, double tol = kProjectTol);
double scalar_product(const Event& p, const Event& q);

}  // namespace cqrel
