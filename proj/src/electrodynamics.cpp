#include "cqrel/electrodynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cqrel/errors.hpp"

namespace cqrel {

namespace {

// Units multiplying d/dt, d/dx, d/dy, d/dz in D (the signs flip for D̄).
constexpr std::array<CQNumber, 4> kDUnits{units::at, -units::i, -units::j, -units::k};
constexpr std::array<CQNumber, 4> kDbarUnits{units::at, units::i, units::j, units::k};

template <class Derivative>
CQNumber contract(const std::array<CQNumber, 4>& unit, Derivative&& d) {
    CQNumber r;
    for (std::size_t mu = 0; mu < 4; ++mu) r = r + unit[mu] * d(mu);
    return r;
}

// (x - x̄) / 2: drops the 1 and @ parts.
CQNumber antihermitian(const CQNumber& x) { return scale(x - conj_quaternion(x), 0.5); }

ScalarField project_component(const CQField& f, std::size_t basis) {
    ScalarField::DerivFn deriv;
    if (f.has_analytic()) {
        deriv = [f, basis](const Event& e, const MultiIndex& m) { return f.analytic(e, m)[basis]; };
    }
    return ScalarField([f, basis](const Event& e) { return f(e)[basis]; }, deriv);
}

CQField assemble(const ScalarField& s0, const VectorField& v, std::size_t slot0) {
    CQField::DerivFn deriv;
    if (s0.has_analytic() && v[0].has_analytic() && v[1].has_analytic() && v[2].has_analytic()) {
        deriv = [s0, v, slot0](const Event& e, const MultiIndex& m) {
            CQNumber r;
            r[slot0] = s0.analytic(e, m);
            for (std::size_t i = 0; i < 3; ++i) r[kI + i] = v[i].analytic(e, m);
            return r;
        };
    }
    return CQField(
        [s0, v, slot0](const Event& e) {
            CQNumber r;
            r[slot0] = s0(e);
            for (std::size_t i = 0; i < 3; ++i) r[kI + i] = v[i](e);
            return r;
        },
        deriv);
}

}  // namespace

CQField PotentialField::as_cq() const { return assemble(phi, a, kAt); }

PotentialField PotentialField::from_cq(const CQField& f) {
    return {project_component(f, kAt), {project_component(f, kI), project_component(f, kJ), project_component(f, kK)}};
}

CQField CurrentDensity::as_cq() const { return assemble(rho, j, kAt); }

CQNumber CurrentDensity::operator()(const Event& e) const {
    return {0.0, rho(e), j[0](e), j[1](e), j[2](e), 0.0, 0.0, 0.0};
}

CurrentDensity CurrentDensity::zero() {
    return {constant_field(0.0), {constant_field(0.0), constant_field(0.0), constant_field(0.0)}};
}

CQNumber apply_D(const CQField& f, const Event& e, const DiffBackend& backend) {
    return contract(kDUnits, [&](std::size_t mu) { return backend.partial(f, e, mu); });
}

CQNumber apply_Dbar(const CQField& f, const Event& e, const DiffBackend& backend) {
    return contract(kDbarUnits, [&](std::size_t mu) { return backend.partial(f, e, mu); });
}

CQField dbar_field(const CQField& f, const DiffBackend& backend) {
    return CQField([f, backend](const Event& e) { return apply_Dbar(f, e, backend); },
                   [f, backend](const Event& e, const MultiIndex& m) {
                       return contract(kDbarUnits,
                                       [&](std::size_t mu) { return backend.derivative(f, e, m.plus(mu)); });
                   });
}

PotentialField gauge_transform(const PotentialField& a, const ScalarField& lambda, const DiffBackend& backend) {
    if (backend.mode == DiffMode::kAnalytic && !lambda.has_analytic()) {
        throw BackendUnavailable("gauge_transform: gauge function has no analytic derivatives");
    }
    PotentialField r;
    r.phi = sum(a.phi, differentiated(lambda, kT, backend));
    for (std::size_t i = 0; i < 3; ++i) r.a[i] = sum(a.a[i], scaled(differentiated(lambda, kX + i, backend), -1.0));
    return r;
}

CQNumber field_strength(const PotentialField& a, const Event& e, const DiffBackend& backend) {
    return antihermitian(apply_Dbar(a.as_cq(), e, backend));
}

CQField field_strength_field(const PotentialField& a, const DiffBackend& backend) {
    const CQField dbar_a = dbar_field(a.as_cq(), backend);
    return CQField([dbar_a](const Event& e) { return antihermitian(dbar_a(e)); },
                   [dbar_a, backend](const Event& e, const MultiIndex& m) {
                       return antihermitian(backend.derivative(dbar_a, e, m));
                   });
}

CQNumber make_field_strength(const std::array<double, 3>& e, const std::array<double, 3>& b) {
    return {0.0, 0.0, b[0], b[1], b[2], -e[0], -e[1], -e[2]};
}

ElectricMagnetic extract_EB(const CQNumber& f, double tol) {
    if (std::abs(f[kOne]) > tol || std::abs(f[kAt]) > tol) {
        throw NotFieldStrength("extract_EB: value has a 1 or @ part (" + std::to_string(f[kOne]) + ", " +
                               std::to_string(f[kAt]) + ")");
    }
    return {{-f[kAtI], -f[kAtJ], -f[kAtK]}, {f[kI], f[kJ], f[kK]}};
}

FieldInvariants field_invariants(const CQNumber& f) {
    const CQNumber sq = f * f;
    return {sq[kOne], 0.5 * sq[kAt]};
}

MaxwellEntry maxwell_residual(const PotentialField& a, const CurrentDensity& j, const Event& e,
                              const DiffBackend& backend) {
    const CQNumber df = apply_D(field_strength_field(a, backend), e, backend);
    MaxwellEntry r;
    r.residual = (df + j(e)).c;
    r.df_imaginary_defect = max_abs(df + conj_both(df));
    return r;
}

VectorField electric_field(const PotentialField& a, const DiffBackend& backend) {
    VectorField out;
    for (std::size_t i = 0; i < 3; ++i) {
        const ScalarField ai = a.a[i];
        const ScalarField phi = a.phi;
        const std::size_t axis = kX + i;
        out[i] = ScalarField(
            [ai, phi, axis, backend](const Event& e) {
                return -backend.partial(ai, e, kT) - backend.partial(phi, e, axis);
            },
            [ai, phi, axis, backend](const Event& e, const MultiIndex& m) {
                return -backend.derivative(ai, e, m.plus(kT)) - backend.derivative(phi, e, m.plus(axis));
            });
    }
    return out;
}

VectorField magnetic_field(const PotentialField& a, const DiffBackend& backend) {
    VectorField out;
    for (std::size_t i = 0; i < 3; ++i) {
        // (i, j, k) cyclic: B_i = d_j A_k - d_k A_j.
        const std::size_t j = (i + 1) % 3;
        const std::size_t k = (i + 2) % 3;
        const ScalarField aj = a.a[j];
        const ScalarField ak = a.a[k];
        out[i] = ScalarField(
            [aj, ak, j, k, backend](const Event& e) {
                return backend.partial(ak, e, kX + j) - backend.partial(aj, e, kX + k);
            },
            [aj, ak, j, k, backend](const Event& e, const MultiIndex& m) {
                return backend.derivative(ak, e, m.plus(kX + j)) - backend.derivative(aj, e, m.plus(kX + k));
            });
    }
    return out;
}

MaxwellEntry classical_residuals(const VectorField& e_field, const VectorField& b_field, const CurrentDensity& j,
                                 const Event& e, const DiffBackend& backend) {
    // grad[c][axis] = d(component c)/d(axis)
    std::array<std::array<double, 4>, 3> de{};
    std::array<std::array<double, 4>, 3> db{};
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t axis = 0; axis < 4; ++axis) {
            de[c][axis] = backend.partial(e_field[c], e, axis);
            db[c][axis] = backend.partial(b_field[c], e, axis);
        }
    const auto curl = [](const std::array<std::array<double, 4>, 3>& d, std::size_t i) {
        const std::size_t jj = (i + 1) % 3;
        const std::size_t kk = (i + 2) % 3;
        return d[kk][kX + jj] - d[jj][kX + kk];
    };
    MaxwellEntry r;
    r.residual[0] = db[0][kX] + db[1][kY] + db[2][kZ];
    r.residual[1] = -(de[0][kX] + de[1][kY] + de[2][kZ]) + j.rho(e);
    for (std::size_t i = 0; i < 3; ++i) {
        r.residual[2 + i] = de[i][kT] - curl(db, i) + j.j[i](e);
        r.residual[5 + i] = db[i][kT] + curl(de, i);
    }
    return r;
}

LagrangianForms lagrangian_density(const PotentialField& a, const CurrentDensity& j, const Event& e,
                                   const DiffBackend& backend, double tol) {
    const VectorField ef = electric_field(a, backend);
    const VectorField bf = magnetic_field(a, backend);
    double e2 = 0.0;
    double b2 = 0.0;
    double j_dot_a = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        const double ei = ef[i](e);
        const double bi = bf[i](e);
        e2 += ei * ei;
        b2 += bi * bi;
        j_dot_a += j.j[i](e) * a.a[i](e);
    }
    const double rho_phi = j.rho(e) * a.phi(e);

    LagrangianForms out;
    out.component = 0.5 * (e2 - b2) - rho_phi + j_dot_a;

    const CQNumber f = field_strength(a, e, backend);
    const CQNumber fc = conj_complex(f);
    const CQNumber av = a.as_cq()(e);
    const CQNumber jv = j(e);
    const CQNumber cq = scale(f * f + fc * fc, 0.25) + scale(conj_quaternion(jv) * av + conj_quaternion(av) * jv, 0.5);
    out.cq = cq[kOne];

    const double limit = tol * std::max(1.0, e2 + b2 + std::abs(rho_phi) + std::abs(j_dot_a));
    for (std::size_t n = 1; n < kBasisSize; ++n) {
        if (std::abs(cq[n]) > limit) {
            throw FormMismatch("lagrangian_density: CQ form has non-real coefficient " + std::to_string(n) + " = " +
                               std::to_string(cq[n]));
        }
    }
    if (std::abs(out.component - out.cq) > limit) {
        throw FormMismatch("lagrangian_density: component form " + std::to_string(out.component) +
                           " != CQ form " + std::to_string(out.cq));
    }
    return out;
}

double lorenz_residual(const PotentialField& a, const Event& e, const DiffBackend& backend, double tol) {
    const CQNumber x = apply_Dbar(a.as_cq(), e, backend);
    const CQNumber s = scale(x + conj_quaternion(x), -0.5);
    for (std::size_t n = 1; n < kBasisSize; ++n) {
        if (std::abs(s[n]) > tol * std::max(1.0, max_abs(x))) {
            throw NotInMinkowskiSubspace("lorenz_residual: expected a real scalar, coefficient " +
                                         std::to_string(n) + " = " + std::to_string(s[n]));
        }
    }
    return s[kOne];
}

CQNumber wave_residual(const PotentialField& a, const CurrentDensity& j, const Event& e, const DiffBackend& backend,
                       double gauge_tol) {
    const double gauge = lorenz_residual(a, e, backend);
    if (!(std::abs(gauge) <= gauge_tol)) {
        throw GaugeViolation("wave_residual: Lorenz gauge residual " + std::to_string(gauge) + " exceeds " +
                             std::to_string(gauge_tol));
    }
    return apply_D(dbar_field(a.as_cq(), backend), e, backend) + j(e);
}

double ResidualNorms::rms(std::size_t slot) const {
    return count == 0 ? 0.0 : std::sqrt(sum_sq[slot] / static_cast<double>(count));
}

double ResidualNorms::overall_max() const { return *std::max_element(max_abs.begin(), max_abs.end()); }

double ResidualNorms::overall_rms() const {
    if (count == 0) return 0.0;
    double s = 0.0;
    for (double v : sum_sq) s += v;
    return std::sqrt(s / static_cast<double>(count * kBasisSize));
}

ResidualNorms ResidualNorms::merge(const ResidualNorms& a, const ResidualNorms& b) {
    ResidualNorms r;
    for (std::size_t n = 0; n < kBasisSize; ++n) {
        r.max_abs[n] = std::max(a.max_abs[n], b.max_abs[n]);
        r.sum_sq[n] = a.sum_sq[n] + b.sum_sq[n];
    }
    r.df_defect_max = std::max(a.df_defect_max, b.df_defect_max);
    r.count = a.count + b.count;
    return r;
}

ResidualNorms accumulate(std::span<const MaxwellEntry> entries) {
    ResidualNorms acc;
    for (const MaxwellEntry& entry : entries) {
        ResidualNorms one;
        for (std::size_t n = 0; n < kBasisSize; ++n) {
            one.max_abs[n] = std::abs(entry.residual[n]);
            one.sum_sq[n] = entry.residual[n] * entry.residual[n];
        }
        one.df_defect_max = entry.df_imaginary_defect;
        one.count = 1;
        acc = ResidualNorms::merge(acc, one);
    }
    return acc;
}

MaxwellReport maxwell_report(const PotentialField& a, const CurrentDensity& j, std::span<const Event> samples,
                             const DiffBackend& backend) {
    MaxwellReport report;
    report.backend = backend;
    report.samples.assign(samples.begin(), samples.end());
    report.entries.reserve(samples.size());
    for (const Event& e : samples) report.entries.push_back(maxwell_residual(a, j, e, backend));
    report.norms = accumulate(report.entries);
    return report;
}

ConvergenceStudy convergence_study(const PotentialField& a, const CurrentDensity& j, std::span<const Event> samples,
                                   DiffMode mode, std::span<const double> steps) {
    ConvergenceStudy study;
    study.mode = mode;
    for (double h : steps) {
        const MaxwellReport report = maxwell_report(a, j, samples, DiffBackend{mode, h});
        study.points.push_back({h, report.norms.overall_max(), report.norms.overall_rms()});
    }
    if (study.points.size() >= 2) {
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        const double n = static_cast<double>(study.points.size());
        for (const ConvergencePoint& p : study.points) {
            const double x = std::log(p.h);
            const double y = std::log(p.rms);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        study.order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return study;
}

}  // namespace cqrel
