#pragma once

// Classical electrodynamics in CQ form (Heaviside-Lorentz units, c = 1).
//
//   D  = @dt - i dx - j dy - k dz        D̄ = @dt + i dx + j dy + k dz
//   A  = @phi + e_i A_i                  J  = @rho + e_i J_i
//   F  = (D̄A - conj(D̄A)) / 2  = e_i (B_i - @E_i)
//   DF + J = 0   <=>   div B = 0,  -div E + rho = 0,
//                      dt E - curl B + J = 0,  dt B + curl E = 0
//
// Coefficients of DF + J along [1, @, e_1, e_2, e_3, @e_1, @e_2, @e_3] are, in
// that order, div B, -div E + rho, the three Ampere residuals and the three
// Faraday residuals.

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "cqrel/algebra.hpp"
#include "cqrel/fields.hpp"
#include "cqrel/minkowski.hpp"

namespace cqrel {

/// A = @phi + e_i A_i.
struct PotentialField {
    ScalarField phi;
    VectorField a;

    CQField as_cq() const;

    /// Splits a Minkowski-valued CQ field into its four components.
    static PotentialField from_cq(const CQField& f);
};

/// J = @rho + e_i J_i.
struct CurrentDensity {
    ScalarField rho;
    VectorField j;

    CQField as_cq() const;
    CQNumber operator()(const Event& e) const;

    static CurrentDensity zero();
};

/// @ df/dt - i df/dx - j df/dy - k df/dz (units multiply from the left).
CQNumber apply_D(const CQField& f, const Event& e, const DiffBackend& backend);

/// @ df/dt + i df/dx + j df/dy + k df/dz.
CQNumber apply_Dbar(const CQField& f, const Event& e, const DiffBackend& backend);

/// D̄f as a field; its derivatives are D̄ of the backend's higher derivatives of f.
CQField dbar_field(const CQField& f, const DiffBackend& backend);

/// A + D lambda: phi -> phi + dt lambda, A_i -> A_i - d_i lambda.
/// Throws BackendUnavailable for the analytic backend if lambda has no
/// analytic derivatives.
PotentialField gauge_transform(const PotentialField& a, const ScalarField& lambda, const DiffBackend& backend);

/// F = (D̄A - conj(D̄A)) / 2 at e.
CQNumber field_strength(const PotentialField& a, const Event& e, const DiffBackend& backend);

/// F as a field, so that D can be applied to it.
CQField field_strength_field(const PotentialField& a, const DiffBackend& backend);

struct ElectricMagnetic {
    std::array<double, 3> e{};
    std::array<double, 3> b{};
};

/// e_i (B_i - @E_i).
CQNumber make_field_strength(const std::array<double, 3>& e, const std::array<double, 3>& b);

/// B_i = coefficient of e_i, E_i = -(coefficient of @e_i). Throws
/// NotFieldStrength if the 1 or @ coefficient exceeds tol.
ElectricMagnetic extract_EB(const CQNumber& f, double tol = 1e-10);

/// E^2 - B^2 and E.B, read off F^2 = (E^2 - B^2) + 2@ E.B.
struct FieldInvariants {
    double e2_minus_b2 = 0.0;
    double e_dot_b = 0.0;
};
FieldInvariants field_invariants(const CQNumber& f);

/// One sample point's eight Maxwell residuals in basis order.
struct MaxwellEntry {
    std::array<double, kBasisSize> residual{};
    /// max |DF + conj(DF)*|; zero when DF is purely imaginary. Only set by
    /// maxwell_residual.
    double df_imaginary_defect = 0.0;

    double div_b() const { return residual[0]; }
    double gauss() const { return residual[1]; }
    double ampere(std::size_t i) const { return residual[2 + i]; }
    double faraday(std::size_t i) const { return residual[5 + i]; }
};

/// Labels of the eight residual slots, in basis order.
inline constexpr std::array<std::string_view, kBasisSize> kResidualLabels{
    "divB", "gauss", "ampere_x", "ampere_y", "ampere_z", "faraday_x", "faraday_y", "faraday_z"};

/// DF + J at e, computed entirely in the CQ algebra.
MaxwellEntry maxwell_residual(const PotentialField& a, const CurrentDensity& j, const Event& e,
                              const DiffBackend& backend);

/// E_i = -dt A_i - d_i phi through scalar calculus.
VectorField electric_field(const PotentialField& a, const DiffBackend& backend);

/// B_i = eps_ijk d_j A_k through scalar calculus.
VectorField magnetic_field(const PotentialField& a, const DiffBackend& backend);

/// The four classical equations' residuals from E, B and J, without the CQ algebra.
MaxwellEntry classical_residuals(const VectorField& e_field, const VectorField& b_field, const CurrentDensity& j,
                                 const Event& e, const DiffBackend& backend);

struct LagrangianForms {
    /// (E^2 - B^2)/2 - rho phi + J.A from the classical fields.
    double component = 0.0;
    /// Real part of (F^2 + (F*)^2)/4 + (J̄A + ĀJ)/2.
    double cq = 0.0;
};

/// Both forms of the Lagrangian density. Throws FormMismatch if they differ by
/// more than tol (scaled by the magnitude of the terms), or if the CQ form has
/// a non-real part.
LagrangianForms lagrangian_density(const PotentialField& a, const CurrentDensity& j, const Event& e,
                                   const DiffBackend& backend, double tol = 1e-12);

/// -(D̄A + conj(D̄A))/2 = dt phi + div A. Zero in Lorenz gauge.
double lorenz_residual(const PotentialField& a, const Event& e, const DiffBackend& backend, double tol = 1e-10);

/// D(D̄A) + J. Throws GaugeViolation if |lorenz_residual| > gauge_tol at e.
CQNumber wave_residual(const PotentialField& a, const CurrentDensity& j, const Event& e, const DiffBackend& backend,
                       double gauge_tol = 1e-10);

/// Max-abs and RMS norms of each residual slot over a sample set.
struct ResidualNorms {
    std::array<double, kBasisSize> max_abs{};
    std::array<double, kBasisSize> sum_sq{};
    double df_defect_max = 0.0;
    std::size_t count = 0;

    double rms(std::size_t slot) const;
    double overall_max() const;
    /// RMS over all slots and samples.
    double overall_rms() const;

    /// Associative merge of two partial accumulations.
    static ResidualNorms merge(const ResidualNorms& a, const ResidualNorms& b);
};

ResidualNorms accumulate(std::span<const MaxwellEntry> entries);

struct MaxwellReport {
    DiffBackend backend;
    std::vector<Event> samples;
    std::vector<MaxwellEntry> entries;
    ResidualNorms norms;
};

MaxwellReport maxwell_report(const PotentialField& a, const CurrentDensity& j, std::span<const Event> samples,
                             const DiffBackend& backend);

struct ConvergencePoint {
    double h = 0.0;
    double max_abs = 0.0;
    double rms = 0.0;
};

struct ConvergenceStudy {
    DiffMode mode = DiffMode::kCentral2;
    std::vector<ConvergencePoint> points;
    /// Least-squares slope of log(rms) against log(h).
    double order = 0.0;
};

/// Runs maxwell_report at each step size and fits the observed order.
ConvergenceStudy convergence_study(const PotentialField& a, const CurrentDensity& j, std::span<const Event> samples,
                                   DiffMode mode, std::span<const double> steps);

}  // namespace cqrel
