#pragma once

// Built-in potentials and currents with closed-form derivatives of any order.
//
// Every analytic field here is a sum of separable terms
//     coeff * f_t(t) * f_x(x) * f_y(y) * f_z(z)
// whose 1-D factors know their own n-th derivatives, so mixed partials are
// exact products of factor derivatives.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cqrel/electrodynamics.hpp"
#include "cqrel/fields.hpp"
#include "cqrel/random.hpp"

namespace cqrel {

/// One-dimensional factor with closed-form derivatives.
struct Factor {
    enum class Kind { kMonomial, kSinusoid, kGaussian, kBump };

    Kind kind = Kind::kMonomial;
    int power = 0;        // monomial: x^power
    double wavenumber = 1.0;  // sinusoid: sin(wavenumber x + phase)
    double phase = 0.0;
    double center = 0.0;  // bump: (1 - s^2)^4 for |s| < 1, s = (x - center) / radius
    double radius = 1.0;

    static Factor one() { return monomial(0); }
    static Factor monomial(int p) { return {Kind::kMonomial, p, 1.0, 0.0, 0.0, 1.0}; }
    static Factor sinusoid(double k, double phase) { return {Kind::kSinusoid, 0, k, phase, 0.0, 1.0}; }
    /// exp(-x^2).
    static Factor gaussian() { return {Kind::kGaussian, 0, 1.0, 0.0, 0.0, 1.0}; }
    static Factor bump(double center, double radius) { return {Kind::kBump, 0, 1.0, 0.0, center, radius}; }

    /// n-th derivative at x.
    double derivative(double x, int n) const;
};

struct SeparableTerm {
    double coeff = 1.0;
    std::array<Factor, 4> factors{Factor::one(), Factor::one(), Factor::one(), Factor::one()};
};

class SeparableExpr {
  public:
    SeparableExpr() = default;
    explicit SeparableExpr(std::vector<SeparableTerm> terms) : terms_(std::move(terms)) {}

    double value(const Event& e) const { return derivative(e, MultiIndex{}); }
    double derivative(const Event& e, const MultiIndex& m) const;

    const std::vector<SeparableTerm>& terms() const { return terms_; }
    SeparableExpr& add(const SeparableTerm& t) {
        terms_.push_back(t);
        return *this;
    }

    /// Field with value and analytic derivatives.
    ScalarField field() const;

  private:
    std::vector<SeparableTerm> terms_;
};

/// Random polynomial of total degree <= degree with coefficients in [-1, 1].
SeparableExpr random_polynomial(Rng& rng, int degree, int terms);

/// Sum of products of sinusoids, wavenumbers in [0.5, 1.5].
SeparableExpr random_trig(Rng& rng, int terms);

PotentialField potential_from(const std::array<SeparableExpr, 4>& components);
CurrentDensity current_from(const std::array<SeparableExpr, 4>& components);

PotentialField random_polynomial_potential(Rng& rng, int degree);
PotentialField random_trig_potential(Rng& rng);
CurrentDensity random_polynomial_current(Rng& rng, int degree);

/// phi = -div Z, A = dZ/dt for a random vector field Z (polynomial or
/// trigonometric), which satisfies dt phi + div A = 0 identically.
PotentialField random_lorenz_potential(Rng& rng, bool trigonometric);

/// A = (0, amplitude sin(z - t), 0, 0).
PotentialField plane_wave(double amplitude);

/// phi = exp(-r^2), A = 0.
PotentialField gaussian_blob();

/// rho = -laplacian(exp(-r^2)) = (6 - 4 r^2) exp(-r^2), J = 0.
CurrentDensity gaussian_blob_charge();

/// The current for which DF + J = 0: rho = div E, J = curl B - dt E, from the
/// analytic derivatives of a (throws BackendUnavailable without them).
CurrentDensity matched_current(const PotentialField& a);

/// A named potential together with its source.
struct FieldCase {
    std::string name;
    std::string description;
    PotentialField potential;
    CurrentDensity current;
    bool lorenz_gauge = false;
};

struct FieldCaseOptions {
    std::uint64_t seed = 1;
    int degree = 3;
    double amplitude = 0.5;
};

/// Names accepted by make_case.
std::vector<std::string> case_names();

/// Builds a named case: constant, linear, plane-wave, gaussian-blob,
/// polynomial, trig, lorenz-polynomial, lorenz-trig. Throws
/// std::invalid_argument for unknown names.
FieldCase make_case(std::string_view name, const FieldCaseOptions& options = {});

}  // namespace cqrel
