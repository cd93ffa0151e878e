#include "cqrel/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string_view>

#include "cqrel/electrodynamics.hpp"
#include "cqrel/field_library.hpp"
#include "cqrel/lorentz.hpp"
#include "cqrel/minkowski.hpp"
#include "cqrel/random.hpp"
#include "cqrel/variation.hpp"

namespace cqrel {

namespace {

BasisProduct symbol(std::string_view s) {
    std::int8_t sign = 1;
    if (s.front() == '-') {
        sign = -1;
        s.remove_prefix(1);
    }
    constexpr std::array<std::string_view, kBasisSize> names{"1", "@", "i", "j", "k", "@i", "@j", "@k"};
    for (std::size_t n = 0; n < kBasisSize; ++n)
        if (names[n] == s) return {sign, static_cast<std::uint8_t>(n)};
    return {0, 0};
}

StructureConstants build_reference_table() {
    // Row a, column b holds e_a * e_b.
    constexpr std::array<std::array<std::string_view, kBasisSize>, kBasisSize> rows{{
        {"1", "@", "i", "j", "k", "@i", "@j", "@k"},
        {"@", "-1", "@i", "@j", "@k", "-i", "-j", "-k"},
        {"i", "@i", "-1", "k", "-j", "-@", "@k", "-@j"},
        {"j", "@j", "-k", "-1", "i", "-@k", "-@", "@i"},
        {"k", "@k", "j", "-i", "-1", "@j", "-@i", "-@"},
        {"@i", "-i", "-@", "@k", "-@j", "1", "-k", "j"},
        {"@j", "-j", "-@k", "-@", "@i", "k", "1", "-i"},
        {"@k", "-k", "@j", "-@i", "-@", "-j", "i", "1"},
    }};
    StructureConstants t;
    for (std::size_t a = 0; a < kBasisSize; ++a)
        for (std::size_t b = 0; b < kBasisSize; ++b) t.table[a][b] = symbol(rows[a][b]);
    return t;
}

CQNumber basis_value(const BasisProduct& p) { return scale(CQNumber::unit(static_cast<Basis>(p.index)), p.sign); }

class Suite {
  public:
    explicit Suite(const VerifyOptions& options) : options_(options) {}

    void add(std::string id, std::string description, std::string anchor, double measured, double tolerance) {
        const double tol = options_.tolerance.value_or(tolerance);
        checks_.push_back({std::move(id), std::move(description), std::move(anchor), measured, tol,
                           std::isfinite(measured) && measured <= tol});
    }

    std::vector<CheckResult> take() { return std::move(checks_); }

  private:
    const VerifyOptions& options_;
    std::vector<CheckResult> checks_;
};

constexpr int kAlgebraDraws = 10000;
constexpr int kFieldPoints = 16;

// CQ field q̄(e) = @t - ix - jy - kz with its (constant) first derivatives.
CQField position_conjugate() {
    return CQField([](const Event& e) { return conj_quaternion(embed(e)); },
                   [](const Event&, const MultiIndex& m) {
                       if (m.order() != 1) return CQNumber{};
                       std::size_t axis = 0;
                       while (m[axis] == 0) ++axis;
                       Event unit;
                       unit[axis] = 1.0;
                       return conj_quaternion(embed(unit));
                   });
}

CQField position() {
    return CQField([](const Event& e) { return embed(e); },
                   [](const Event&, const MultiIndex& m) {
                       if (m.order() != 1) return CQNumber{};
                       std::size_t axis = 0;
                       while (m[axis] == 0) ++axis;
                       Event unit;
                       unit[axis] = 1.0;
                       return embed(unit);
                   });
}

double entry_difference(const MaxwellEntry& a, const MaxwellEntry& b) {
    double worst = 0.0;
    for (std::size_t n = 0; n < kBasisSize; ++n) worst = std::max(worst, std::abs(a.residual[n] - b.residual[n]));
    return worst;
}

}  // namespace

const StructureConstants& reference_basis_table() {
    static const StructureConstants table = build_reference_table();
    return table;
}

bool VerificationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

io::json VerificationReport::to_json() const {
    io::json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["tolerance_override"] = tolerance_override ? io::json(*tolerance_override) : io::json(nullptr);
    j["backend"] = backend;
    io::json arr = io::json::array();
    for (const CheckResult& c : checks) {
        arr.push_back({{"id", c.id},
                       {"description", c.description},
                       {"anchor", c.anchor},
                       {"measured", c.measured},
                       {"tolerance", c.tolerance},
                       {"pass", c.pass}});
    }
    j["checks"] = std::move(arr);
    j["pass"] = pass();
    return j;
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << suite << " (seed " << seed << ", backend " << backend << ")\n";
    for (const CheckResult& c : checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.id << "  measured " << c.measured << "  tol " << c.tolerance
            << "  [" << c.anchor << "]\n";
    }
    out << (pass() ? "all checks passed" : "FAILED") << "\n";
    return out.str();
}

VerificationReport verify_identities(const VerifyOptions& options) {
    Suite suite(options);
    Rng rng(options.seed);
    const StructureConstants& table = options.table ? *options.table : kStructureConstants;

    {
        double worst = 0.0;
        const StructureConstants& ref = reference_basis_table();
        for (std::size_t a = 0; a < kBasisSize; ++a)
            for (std::size_t b = 0; b < kBasisSize; ++b) {
                const CQNumber got = mul(CQNumber::unit(static_cast<Basis>(a)), CQNumber::unit(static_cast<Basis>(b)), table);
                worst = std::max(worst, distance(got, basis_value(ref(a, b))));
            }
        suite.add("basis-table", "all 64 basis products match the hand-entered table",
                  "@^2 = -1; i^2 = j^2 = k^2 = -1; ij = -ji = k, jk = -kj = i, ki = -ik = j; [@, i] = 0", worst, 0.0);
    }

    {
        double complex_worst = 0.0;
        double quat_worst = 0.0;
        double commute_worst = 0.0;
        double assoc_worst = 0.0;
        for (int n = 0; n < kAlgebraDraws; ++n) {
            const CQNumber a = rng.cq();
            const CQNumber b = rng.cq();
            const CQNumber c = rng.cq();
            complex_worst = std::max(complex_worst, distance(conj_complex(a * b), conj_complex(a) * conj_complex(b)));
            quat_worst =
                std::max(quat_worst, distance(conj_quaternion(a * b), conj_quaternion(b) * conj_quaternion(a)));
            commute_worst =
                std::max(commute_worst, distance(conj_quaternion(conj_complex(a)), conj_complex(conj_quaternion(a))));
            assoc_worst = std::max(assoc_worst, distance((a * b) * c, a * (b * c)));
            assoc_worst = std::max(assoc_worst, distance(a * (b + c), a * b + a * c));
        }
        suite.add("conj-complex-product", "complex conjugation is a homomorphism", "(o1 o2)* = o1* o2*",
                  complex_worst, 1e-12);
        suite.add("conj-quaternion-product", "quaternionic conjugation reverses products",
                  "conj(o1 o2) = conj(o2) conj(o1)", quat_worst, 1e-12);
        suite.add("conjugations-commute", "the two conjugations commute", "conj(a*) = (conj a)*", commute_worst, 0.0);
        suite.add("associativity", "product is associative and distributive", "(ab)c = a(bc), a(b+c) = ab + ac",
                  assoc_worst, 1e-12);
    }

    {
        double worst = 0.0;
        double misclassified = 0.0;
        for (int n = 0; n < 1000; ++n) {
            const CQNumber q = rng.minkowski();
            worst = std::max(worst, distance(conj_complex(q), -conj_quaternion(q)));
            const CQNumber o = rng.cq();
            // A generic element is not in M and must not satisfy a* = -ā.
            if (distance(conj_complex(o), -conj_quaternion(o)) <= 1e-12 || is_minkowski(o)) misclassified += 1.0;
        }
        suite.add("minkowski-conjugation", "time reversal equals minus parity exactly on M",
                  "q* = -q̄ for q = @t + ix + jy + kz", worst + misclassified, 1e-12);
    }

    {
        double interval_worst = 0.0;
        double product_worst = 0.0;
        for (int n = 0; n < kAlgebraDraws; ++n) {
            const Rotor w = rng.rotor_chain(5);
            const Event e = rng.event();
            const Event f = rng.event();
            const Event e2 = apply_contravariant(w, e);
            const Event f2 = apply_contravariant(w, f);
            interval_worst = std::max(interval_worst, std::abs(proper_interval(e2) - proper_interval(e)));
            product_worst = std::max(product_worst, std::abs(scalar_product(e2, f2) - scalar_product(e, f)));
        }
        suite.add("proper-time-invariance", "proper interval is preserved by random rotor chains",
                  "-q̄'q' = -q̄q for q' = w q w̄*", interval_worst, 1e-10);
        suite.add("scalar-product-invariance", "scalar product is preserved under simultaneous transformation",
                  "<p', q'> = <p, q>", product_worst, 1e-10);
    }

    {
        double worst = 0.0;
        for (int n = 0; n < kAlgebraDraws; ++n) {
            const CQNumber p = rng.minkowski();
            const CQNumber q = rng.minkowski();
            const CQNumber polar = scale(conj_quaternion(p - q) * (p - q) - conj_quaternion(p + q) * (p + q), 0.25);
            const CQNumber left = scale(conj_quaternion(p) * q + conj_quaternion(q) * p, -0.5);
            const CQNumber right = scale(p * conj_quaternion(q) + q * conj_quaternion(p), -0.5);
            const Event pe = project(p);
            const Event qe = project(q);
            const double explicit_form = pe.t * qe.t - pe.x * qe.x - pe.y * qe.y - pe.z * qe.z;
            worst = std::max({worst, distance(polar, left), distance(left, right),
                              distance(left, CQNumber::scalar(explicit_form))});
        }
        suite.add("scalar-product-forms", "polarization and both symmetric forms agree with Et - p.x",
                  "<p,q> = (conj(p-q)(p-q) - conj(p+q)(p+q))/4 = -(p̄q + q̄p)/2 = -(pq̄ + qp̄)/2", worst, 1e-12);
    }

    {
        double worst = 0.0;
        for (int n = 0; n < 1000; ++n) {
            const CQNumber nq = rng.direction().as_cq();
            const CQNumber n_at = nq * units::at;
            worst = std::max({worst, distance(nq * nq, CQNumber::scalar(-1.0)),
                              distance(n_at * n_at, CQNumber::scalar(1.0))});
        }
        suite.add("direction-squares", "unit imaginary directions square to -1, and to +1 with @",
                  "n^2 = -1, (n@)^2 = 1", worst, 1e-12);
    }

    {
        double norm_worst = 0.0;
        double cover_worst = 0.0;
        double covariant_worst = 0.0;
        for (int n = 0; n < 2000; ++n) {
            Rotor w;
            for (int f = 0; f < 8; ++f) w = compose(rng.elementary_rotor(), w);
            norm_worst = std::max(norm_worst, w.norm_defect());
            const CQNumber q = rng.minkowski();
            cover_worst = std::max(cover_worst, distance(apply_contravariant(w, q), apply_contravariant(-w, q)));
            covariant_worst = std::max(covariant_worst, distance(conj_quaternion(apply_contravariant(w, q)),
                                                                 apply_covariant(w, conj_quaternion(q))));
        }
        suite.add("rotor-unit-norm", "rotor norm survives chains of 8 compositions", "w w̄ = w̄ w = 1", norm_worst,
                  1e-10);
        suite.add("double-cover", "w and -w induce the same transformation", "(-w) q conj(-w)* = w q w̄*",
                  cover_worst, 1e-12);
        suite.add("covariant-consistency", "covariant law is the conjugate of the contravariant law",
                  "q̄ -> w* q̄ w̄", covariant_worst, 1e-10);
    }

    {
        const DiffBackend analytic = DiffBackend::analytic();
        double worst = 0.0;
        for (int n = 0; n < 100; ++n) {
            const Event e = rng.event();
            worst = std::max(worst, distance(-apply_D(position_conjugate(), e, analytic), CQNumber::scalar(4.0)));
            worst = std::max(worst, distance(-apply_Dbar(position(), e, analytic), CQNumber::scalar(4.0)));
        }
        suite.add("derivative-of-position", "the differentiation operators acting on position",
                  "-D q̄ = -D̄ q = 4", worst, 1e-12);
    }

    const DiffBackend analytic = DiffBackend::analytic();

    {
        // Potentials covering every residual slot, each paired with an
        // unmatched random current so that the residuals are non-zero.
        std::vector<PotentialField> potentials;
        for (int n = 0; n < 3; ++n) potentials.push_back(random_polynomial_potential(rng, 3));
        potentials.push_back(random_trig_potential(rng));
        potentials.push_back(random_lorenz_potential(rng, true));
        potentials.push_back(plane_wave(0.7));
        potentials.push_back(gaussian_blob());
        double oracle_worst = 0.0;
        double imaginary_worst = 0.0;
        for (const PotentialField& a : potentials) {
            const CurrentDensity j = random_polynomial_current(rng, 2);
            const VectorField ef = electric_field(a, analytic);
            const VectorField bf = magnetic_field(a, analytic);
            for (int n = 0; n < kFieldPoints; ++n) {
                const Event e = rng.event();
                const MaxwellEntry cq = maxwell_residual(a, j, e, analytic);
                const MaxwellEntry classical = classical_residuals(ef, bf, j, e, analytic);
                oracle_worst = std::max(oracle_worst, entry_difference(cq, classical));
                imaginary_worst = std::max(imaginary_worst, cq.df_imaginary_defect);
            }
        }
        suite.add("maxwell-oracle", "CQ residual DF + J equals the four classical residuals slot by slot",
                  "DF + J = div B - @(div E - rho) + e_i(dt E - curl B + J)_i + @e_i(dt B + curl E)_i",
                  oracle_worst, 1e-10);
        suite.add("df-imaginary", "DF is purely imaginary", "DF + conj(DF)* = 0", imaginary_worst, 1e-10);
    }

    {
        const FieldCase wave = make_case("plane-wave");
        const FieldCase blob = make_case("gaussian-blob");
        double worst = 0.0;
        for (int n = 0; n < kFieldPoints; ++n) {
            const Event e = rng.event(-2.0, 2.0);
            for (const FieldCase* c : {&wave, &blob}) {
                const MaxwellEntry r = maxwell_residual(c->potential, c->current, e, analytic);
                for (double v : r.residual) worst = std::max(worst, std::abs(v));
            }
        }
        suite.add("maxwell-solutions", "plane wave in vacuum and Gaussian blob with its charge solve DF + J = 0",
                  "DF + J = 0", worst, 1e-10);
    }

    {
        double forms_worst = 0.0;
        double invariant_worst = 0.0;
        for (int n = 0; n < 5; ++n) {
            const PotentialField a = random_polynomial_potential(rng, 3);
            const CurrentDensity j = random_polynomial_current(rng, 2);
            for (int p = 0; p < kFieldPoints; ++p) {
                const Event e = rng.event();
                const LagrangianForms forms = lagrangian_density(a, j, e, analytic, 1.0);
                forms_worst = std::max(forms_worst, std::abs(forms.component - forms.cq));
                const CQNumber f = field_strength(a, e, analytic);
                const FieldInvariants before = field_invariants(f);
                const FieldInvariants after = field_invariants(apply_field_strength(rng.rotor_chain(3), f));
                invariant_worst = std::max({invariant_worst, std::abs(before.e2_minus_b2 - after.e2_minus_b2),
                                            std::abs(before.e_dot_b - after.e_dot_b)});
            }
        }
        suite.add("lagrangian-forms", "component and CQ forms of the Lagrangian density agree",
                  "(E^2 - B^2)/2 - rho phi + J.A = (F^2 + (F*)^2)/4 + (J̄A + ĀJ)/2", forms_worst, 1e-12);
        suite.add("field-invariants", "E^2 - B^2 and E.B are invariant under F -> w* F w̄*",
                  "F^2 = E^2 - B^2 + 2@ E.B", invariant_worst, 1e-10);
    }

    {
        double worst = 0.0;
        for (int n = 0; n < 5; ++n) {
            const PotentialField a = random_polynomial_potential(rng, 3);
            const ScalarField lambda = random_polynomial(rng, 4, 8).field();
            const PotentialField a2 = gauge_transform(a, lambda, analytic);
            for (int p = 0; p < kFieldPoints; ++p) {
                const Event e = rng.event();
                worst = std::max(worst, distance(field_strength(a, e, analytic), field_strength(a2, e, analytic)));
            }
        }
        suite.add("gauge-invariance", "field strength is unchanged by a gauge transformation",
                  "F[A + D lambda] = F[A]", worst, 1e-10);
    }

    {
        double worst = 0.0;
        for (int n = 0; n < 4; ++n) {
            const PotentialField a = random_lorenz_potential(rng, n % 2 == 1);
            const CurrentDensity j = random_polynomial_current(rng, 2);
            for (int p = 0; p < kFieldPoints; ++p) {
                const Event e = rng.event();
                const CQNumber wave = wave_residual(a, j, e, analytic);
                const MaxwellEntry max = maxwell_residual(a, j, e, analytic);
                worst = std::max(worst, distance(wave, CQNumber(max.residual)));
            }
        }
        suite.add("wave-reduction", "in Lorenz gauge Maxwell's equation is the wave equation",
                  "dt phi + div A = 0  =>  D D̄ A + J = DF + J", worst, 1e-10);
    }

    {
        const FieldCase trig = make_case("trig", {.seed = options.seed});
        std::vector<Event> samples;
        for (int n = 0; n < 8; ++n) samples.push_back(rng.event());
        constexpr std::array<double, 4> h2{0.08, 0.04, 0.02, 0.01};
        constexpr std::array<double, 4> h4{0.16, 0.08, 0.04, 0.02};
        const ConvergenceStudy s2 = convergence_study(trig.potential, trig.current, samples, DiffMode::kCentral2, h2);
        const ConvergenceStudy s4 = convergence_study(trig.potential, trig.current, samples, DiffMode::kCentral4, h4);
        suite.add("fd2-convergence", "order-2 stencil converges at second order (|order - 2|)",
                  "central difference (f(x+h) - f(x-h))/2h", std::abs(s2.order - 2.0), 0.3);
        suite.add("fd4-convergence", "order-4 stencil converges at fourth order (|order - 4|)",
                  "central difference (-f(x+2h) + 8f(x+h) - 8f(x-h) + f(x-2h))/12h", std::abs(s4.order - 4.0), 0.3);
    }

    {
        const Box box{rng.event(-0.5, 0.5), 0.5};
        const PotentialField a = random_polynomial_potential(rng, 3);
        const CurrentDensity j = random_polynomial_current(rng, 2);
        const PotentialField da = bump_perturbation(rng, box);
        const double pairing = stationarity_pairing(a, j, da, box, analytic);
        const double eps = 1e-3;
        const double s0 = action(a, j, box, analytic);
        const double plus = action(perturbed(a, da, eps), j, box, analytic);
        const double minus = action(perturbed(a, da, -eps), j, box, analytic);
        const double derivative = (plus - minus) / (2.0 * eps);
        const double rel = std::abs(derivative - pairing) / std::max(1e-300, std::abs(pairing));
        suite.add("stationarity", "directional derivative of the action equals the DF + J pairing (relative)",
                  "dS[A + e dA]/de = -Integral <DF + J, dA>", rel, 1e-8);
        // S(e) - S(0) - e * pairing is quadratic in e.
        const double r1 = std::abs(plus - s0 - eps * pairing);
        const double r2 = std::abs(action(perturbed(a, da, 2.0 * eps), j, box, analytic) - s0 - 2.0 * eps * pairing);
        suite.add("stationarity-second-order", "first-order remainder scales as e^2 (|order - 2|)",
                  "S[A + e dA] = S[A] + e dS + O(e^2)", std::abs(std::log2(r2 / r1) - 2.0), 0.1);
    }

    VerificationReport report;
    report.suite = "verify-identities";
    report.seed = options.seed;
    report.tolerance_override = options.tolerance;
    report.backend = "analytic";
    report.checks = suite.take();
    return report;
}

}  // namespace cqrel
