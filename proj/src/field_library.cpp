#include "cqrel/field_library.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace cqrel {

namespace {

// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x) {
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double falling_factorial(int p, int n) {
    double r = 1.0;
    for (int k = 0; k < n; ++k) r *= p - k;
    return r;
}

// (1 - s^2)^4 = 1 - 4s^2 + 6s^4 - 4s^6 + s^8, differentiated n times in s.
double bump_derivative(double s, int n) {
    if (std::abs(s) >= 1.0) return 0.0;
    constexpr std::array<double, 9> poly{1, 0, -4, 0, 6, 0, -4, 0, 1};
    double r = 0.0;
    for (int p = 8; p >= n; --p) r = r * s + poly[p] * falling_factorial(p, n);
    return r;
}

}  // namespace

double Factor::derivative(double x, int n) const {
    switch (kind) {
        case Kind::kMonomial:
            if (n > power) return 0.0;
            return falling_factorial(power, n) * std::pow(x, power - n);
        case Kind::kSinusoid:
            return std::pow(wavenumber, n) * std::sin(wavenumber * x + phase + 0.5 * std::numbers::pi * n);
        case Kind::kGaussian:
            return (n % 2 == 0 ? 1.0 : -1.0) * hermite(n, x) * std::exp(-x * x);
        case Kind::kBump:
            return bump_derivative((x - center) / radius, n) / std::pow(radius, n);
    }
    return 0.0;
}

double SeparableExpr::derivative(const Event& e, const MultiIndex& m) const {
    double total = 0.0;
    for (const SeparableTerm& term : terms_) {
        double v = term.coeff;
        for (std::size_t axis = 0; axis < 4 && v != 0.0; ++axis) v *= term.factors[axis].derivative(e[axis], m[axis]);
        total += v;
    }
    return total;
}

ScalarField SeparableExpr::field() const {
    auto self = std::make_shared<const SeparableExpr>(*this);
    return ScalarField([self](const Event& e) { return self->value(e); },
                       [self](const Event& e, const MultiIndex& m) { return self->derivative(e, m); });
}

SeparableExpr random_polynomial(Rng& rng, int degree, int terms) {
    SeparableExpr expr;
    for (int n = 0; n < terms; ++n) {
        SeparableTerm term;
        term.coeff = rng.uniform(-1.0, 1.0);
        int remaining = degree;
        for (std::size_t axis = 0; axis < 4; ++axis) {
            const int p = rng.integer(0, remaining);
            term.factors[axis] = Factor::monomial(p);
            remaining -= p;
        }
        expr.add(term);
    }
    return expr;
}

SeparableExpr random_trig(Rng& rng, int terms) {
    SeparableExpr expr;
    for (int n = 0; n < terms; ++n) {
        SeparableTerm term;
        term.coeff = rng.uniform(-1.0, 1.0);
        for (std::size_t axis = 0; axis < 4; ++axis) {
            term.factors[axis] = Factor::sinusoid(rng.uniform(0.5, 1.5), rng.uniform(0.0, 2.0 * std::numbers::pi));
        }
        expr.add(term);
    }
    return expr;
}

PotentialField potential_from(const std::array<SeparableExpr, 4>& c) {
    return {c[0].field(), {c[1].field(), c[2].field(), c[3].field()}};
}

CurrentDensity current_from(const std::array<SeparableExpr, 4>& c) {
    return {c[0].field(), {c[1].field(), c[2].field(), c[3].field()}};
}

PotentialField random_polynomial_potential(Rng& rng, int degree) {
    std::array<SeparableExpr, 4> c;
    for (auto& expr : c) expr = random_polynomial(rng, degree, 6);
    return potential_from(c);
}

PotentialField random_trig_potential(Rng& rng) {
    std::array<SeparableExpr, 4> c;
    for (auto& expr : c) expr = random_trig(rng, 3);
    return potential_from(c);
}

CurrentDensity random_polynomial_current(Rng& rng, int degree) {
    std::array<SeparableExpr, 4> c;
    for (auto& expr : c) expr = random_polynomial(rng, degree, 4);
    return current_from(c);
}

PotentialField random_lorenz_potential(Rng& rng, bool trigonometric) {
    const DiffBackend analytic = DiffBackend::analytic();
    std::array<ScalarField, 3> z;
    for (auto& zi : z) zi = (trigonometric ? random_trig(rng, 3) : random_polynomial(rng, 4, 6)).field();
    PotentialField a;
    a.phi = scaled(sum(sum(differentiated(z[0], kX, analytic), differentiated(z[1], kY, analytic)),
                       differentiated(z[2], kZ, analytic)),
                   -1.0);
    for (std::size_t i = 0; i < 3; ++i) a.a[i] = differentiated(z[i], kT, analytic);
    return a;
}

PotentialField plane_wave(double amplitude) {
    // amplitude * sin(z - t) = amplitude * (sin z cos t - cos z sin t)
    constexpr double half_pi = 0.5 * std::numbers::pi;
    SeparableTerm first;
    first.coeff = amplitude;
    first.factors[kT] = Factor::sinusoid(1.0, half_pi);
    first.factors[kZ] = Factor::sinusoid(1.0, 0.0);
    SeparableTerm second;
    second.coeff = -amplitude;
    second.factors[kT] = Factor::sinusoid(1.0, 0.0);
    second.factors[kZ] = Factor::sinusoid(1.0, half_pi);
    const SeparableExpr ax({first, second});
    return {constant_field(0.0), {ax.field(), constant_field(0.0), constant_field(0.0)}};
}

PotentialField gaussian_blob() {
    SeparableTerm term;
    term.factors[kX] = Factor::gaussian();
    term.factors[kY] = Factor::gaussian();
    term.factors[kZ] = Factor::gaussian();
    return {SeparableExpr({term}).field(), {constant_field(0.0), constant_field(0.0), constant_field(0.0)}};
}

CurrentDensity gaussian_blob_charge() {
    const ScalarField rho([](const Event& e) {
        const double r2 = e.x * e.x + e.y * e.y + e.z * e.z;
        return (6.0 - 4.0 * r2) * std::exp(-r2);
    });
    return {rho, {constant_field(0.0), constant_field(0.0), constant_field(0.0)}};
}

CurrentDensity matched_current(const PotentialField& a) {
    if (!a.phi.has_analytic() || !a.a[0].has_analytic() || !a.a[1].has_analytic() || !a.a[2].has_analytic()) {
        throw BackendUnavailable("matched_current needs a potential with analytic derivatives");
    }
    const DiffBackend analytic = DiffBackend::analytic();
    const VectorField ef = electric_field(a, analytic);
    const VectorField bf = magnetic_field(a, analytic);
    CurrentDensity j;
    j.rho = ScalarField([ef](const Event& e) {
        const DiffBackend d = DiffBackend::analytic();
        return d.partial(ef[0], e, kX) + d.partial(ef[1], e, kY) + d.partial(ef[2], e, kZ);
    });
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t jj = (i + 1) % 3;
        const std::size_t kk = (i + 2) % 3;
        j.j[i] = ScalarField([ef, bf, i, jj, kk](const Event& e) {
            const DiffBackend d = DiffBackend::analytic();
            const double curl_b = d.partial(bf[kk], e, kX + jj) - d.partial(bf[jj], e, kX + kk);
            return curl_b - d.partial(ef[i], e, kT);
        });
    }
    return j;
}

std::vector<std::string> case_names() {
    return {"constant", "linear", "plane-wave", "gaussian-blob", "polynomial", "trig", "lorenz-polynomial",
            "lorenz-trig"};
}

FieldCase make_case(std::string_view name, const FieldCaseOptions& options) {
    Rng rng(options.seed);
    FieldCase c;
    c.name = std::string(name);
    if (name == "constant") {
        c.description = "constant potential; F = 0";
        c.potential = {constant_field(0.3), {constant_field(0.1), constant_field(-0.2), constant_field(0.5)}};
        c.current = CurrentDensity::zero();
        c.lorenz_gauge = true;
    } else if (name == "linear") {
        c.description = "random linear potential; constant F, source-free";
        c.potential = random_polynomial_potential(rng, 1);
        c.current = CurrentDensity::zero();
    } else if (name == "plane-wave") {
        c.description = "vacuum plane wave A = (0, a sin(z - t), 0, 0)";
        c.potential = plane_wave(options.amplitude);
        c.current = CurrentDensity::zero();
        c.lorenz_gauge = true;
    } else if (name == "gaussian-blob") {
        c.description = "static phi = exp(-r^2) with rho = (6 - 4r^2) exp(-r^2)";
        c.potential = gaussian_blob();
        c.current = gaussian_blob_charge();
        c.lorenz_gauge = true;
    } else if (name == "polynomial") {
        c.description = "random polynomial potential with matched current";
        c.potential = random_polynomial_potential(rng, options.degree);
        c.current = matched_current(c.potential);
    } else if (name == "trig") {
        c.description = "random trigonometric potential with matched current";
        c.potential = random_trig_potential(rng);
        c.current = matched_current(c.potential);
    } else if (name == "lorenz-polynomial" || name == "lorenz-trig") {
        c.description = "random Lorenz-gauge potential (phi = -div Z, A = dZ/dt) with matched current";
        c.potential = random_lorenz_potential(rng, name == "lorenz-trig");
        c.current = matched_current(c.potential);
        c.lorenz_gauge = true;
    } else {
        throw std::invalid_argument("unknown field '" + std::string(name) + "'");
    }
    return c;
}

}  // namespace cqrel
