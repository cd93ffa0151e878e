// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: cqrel_acceptance [path-to-cqrel-binary]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cqrel/cli.hpp"
#include "cqrel/electrodynamics.hpp"
#include "cqrel/field_library.hpp"
#include "cqrel/io.hpp"
#include "cqrel/kernels.hpp"
#include "cqrel/lorentz.hpp"
#include "cqrel/random.hpp"
#include "cqrel/variation.hpp"
#include "oracles.hpp"

using namespace cqrel;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::vector<Event> samples(std::uint64_t seed, int n) {
    Rng rng(seed);
    std::vector<Event> out;
    for (int k = 0; k < n; ++k) out.push_back(rng.event());
    return out;
}

const DiffBackend kAnalytic = DiffBackend::analytic();

Outcome basis_products() {
    int mismatches = 0;
    for (std::size_t a = 0; a < kBasisSize; ++a)
        for (std::size_t b = 0; b < kBasisSize; ++b)
            if ((CQNumber::unit(static_cast<Basis>(a)) * CQNumber::unit(static_cast<Basis>(b))).c != oracle::basis_product(a, b).c) ++mismatches;
    return {mismatches == 0, std::to_string(mismatches) + " of 64 products differ"};
}

Outcome conjugation_laws() {
    Rng rng(2024);
    double worst = 0.0;
    for (int n = 0; n < 10000; ++n) {
        const CQNumber a = rng.cq(), b = rng.cq();
        worst = std::max(worst, distance(conj_complex(a * b), conj_complex(a) * conj_complex(b)));
        worst = std::max(worst, distance(conj_quaternion(a * b), conj_quaternion(b) * conj_quaternion(a)));
    }
    return {worst <= 1e-12, "max error " + fmt(worst) + " (limit 1e-12)"};
}

// A rotor chain built from explicit factors so the matrix oracle can be
// assembled from textbook boost and rotation matrices.
struct Chain {
    Rotor rotor;
    LorentzMatrix matrix = LorentzMatrix::identity();
};

Chain random_chain(Rng& rng) {
    Chain c;
    const int factors = rng.integer(1, 5);
    for (int f = 0; f < factors; ++f) {
        const UnitDirection d = rng.direction();
        if (rng.uniform() < 0.5) {
            const double th = rng.uniform(-std::numbers::pi, std::numbers::pi);
            c.rotor = compose(rotor_rotation(d, th), c.rotor);
            c.matrix = oracle::rotation_matrix(d.x(), d.y(), d.z(), th) * c.matrix;
        } else {
            const double lam = rng.uniform(-1.0, 1.0);
            c.rotor = compose(rotor_boost(d, lam), c.rotor);
            c.matrix = oracle::boost_matrix(d.x(), d.y(), d.z(), lam) * c.matrix;
        }
    }
    return c;
}

Outcome lorentz_oracle() {
    Rng rng(3031);
    double coord = 0.0, kernel = 0.0, interval = 0.0;
    kernels::EventBatch one(1), moved;
    for (int n = 0; n < 10000; ++n) {
        const Chain c = random_chain(rng);
        const Event e = rng.event();
        const Event want = c.matrix.apply(e);
        const Event got = apply_contravariant(c.rotor, e);
        one.set(0, e);
        kernels::transform_events(c.rotor, one, moved);
        const Event batched = moved.get(0);
        for (std::size_t ax = 0; ax < 4; ++ax) {
            coord = std::max(coord, std::abs(got[ax] - want[ax]));
            kernel = std::max(kernel, std::abs(batched[ax] - want[ax]));
        }
        interval = std::max(interval, std::abs(proper_interval(embed(got)) - proper_interval(e)));
    }
    const bool pass = coord <= 1e-10 && kernel <= 1e-10 && interval <= 1e-10;
    return {pass, "coordinate error " + fmt(coord) + ", " + std::string(kernels::isa_name(kernels::active_isa())) +
                      " kernel " + fmt(kernel) + ", interval drift " + fmt(interval) + " (limit 1e-10)"};
}

Outcome group_structure() {
    Rng rng(4049);
    double homo = 0.0, cover = 0.0, additive = 0.0;
    for (int n = 0; n < 2000; ++n) {
        const Rotor w1 = rng.rotor_chain(5), w2 = rng.rotor_chain(5);
        homo = std::max(homo, max_abs_difference(to_matrix(compose(w2, w1)), to_matrix(w2) * to_matrix(w1)));
        const Event e = rng.event();
        const Event p = apply_contravariant(w1, e), m = apply_contravariant(-w1, e);
        for (std::size_t ax = 0; ax < 4; ++ax) cover = std::max(cover, std::abs(p[ax] - m[ax]));

        const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
        const UnitDirection x(1, 0, 0);
        additive = std::max(additive, distance(compose(rotor_boost(x, a), rotor_boost(x, b)).value(),
                                               rotor_boost(x, a + b).value()));
    }
    const bool pass = homo <= 1e-10 && cover == 0.0 && additive <= 1e-12;
    return {pass, "homomorphism " + fmt(homo) + ", double cover " + fmt(cover) + ", rapidity additivity " +
                      fmt(additive)};
}

Outcome maxwell_equivalence() {
    Rng rng(5051);
    const std::vector<Event> pts = samples(5052, 16);
    std::vector<PotentialField> potentials;
    for (int n = 0; n < 3; ++n) potentials.push_back(random_polynomial_potential(rng, 3));
    for (int n = 0; n < 3; ++n) potentials.push_back(random_trig_potential(rng));
    potentials.push_back(plane_wave(0.8));
    potentials.push_back(gaussian_blob());

    double diff = 0.0, matched = 0.0;
    for (const PotentialField& a : potentials) {
        const VectorField ef = electric_field(a, kAnalytic), bf = magnetic_field(a, kAnalytic);
        // Matched currents make both sides vanish; an arbitrary current keeps them non-trivial.
        for (const CurrentDensity& j : {matched_current(a), random_polynomial_current(rng, 2)}) {
            for (const Event& e : pts) {
                const MaxwellEntry cq = maxwell_residual(a, j, e, kAnalytic);
                const MaxwellEntry cl = classical_residuals(ef, bf, j, e, kAnalytic);
                for (std::size_t s = 0; s < kBasisSize; ++s) diff = std::max(diff, std::abs(cq.residual[s] - cl.residual[s]));
            }
        }
        matched = std::max(matched, maxwell_report(a, matched_current(a), pts, kAnalytic).norms.overall_max());
    }
    const double wave = maxwell_report(plane_wave(0.8), CurrentDensity::zero(), pts, kAnalytic).norms.overall_max();
    const double blob = maxwell_report(gaussian_blob(), gaussian_blob_charge(), pts, kAnalytic).norms.overall_max();
    const bool pass = diff <= 1e-10 && matched <= 1e-10 && wave <= 1e-10 && blob <= 1e-10;
    return {pass, std::to_string(potentials.size()) + " potentials: CQ vs classical " + fmt(diff) +
                      ", matched-source residual " + fmt(matched) + ", plane wave " + fmt(wave) + ", blob " +
                      fmt(blob)};
}

Outcome fd_convergence() {
    Rng rng(6067);
    const PotentialField a = random_trig_potential(rng);
    const CurrentDensity j = matched_current(a);
    const std::vector<Event> pts = samples(6068, 8);
    const std::vector<double> h2{0.08, 0.04, 0.02, 0.01};
    const std::vector<double> h4{0.16, 0.08, 0.04, 0.02};
    const double o2 = convergence_study(a, j, pts, DiffMode::kCentral2, h2).order;
    const double o4 = convergence_study(a, j, pts, DiffMode::kCentral4, h4).order;
    const bool pass = o2 >= 1.7 && o2 <= 2.3 && o4 >= 3.7 && o4 <= 4.3;
    return {pass, "order-2 stencil " + fmt(o2) + " (want [1.7, 2.3]), order-4 stencil " + fmt(o4) +
                      " (want [3.7, 4.3])"};
}

Outcome gauge() {
    Rng rng(7079);
    const std::vector<Event> pts = samples(7080, 16);
    double f_change = 0.0, wave_diff = 0.0;
    for (int n = 0; n < 5; ++n) {
        const PotentialField a = random_polynomial_potential(rng, 3);
        const ScalarField lambda = random_polynomial(rng, 4, 8).field();
        const PotentialField g = gauge_transform(a, lambda, kAnalytic);
        for (const Event& e : pts)
            f_change = std::max(f_change, distance(field_strength(a, e, kAnalytic), field_strength(g, e, kAnalytic)));
    }
    std::vector<PotentialField> lorenz{plane_wave(0.5)};
    for (int n = 0; n < 3; ++n) {
        lorenz.push_back(random_lorenz_potential(rng, false));
        lorenz.push_back(random_lorenz_potential(rng, true));
    }
    for (const PotentialField& a : lorenz) {
        const CurrentDensity j = random_polynomial_current(rng, 2);
        for (const Event& e : pts) {
            const CQNumber w = wave_residual(a, j, e, kAnalytic);
            const MaxwellEntry m = maxwell_residual(a, j, e, kAnalytic);
            for (std::size_t s = 0; s < kBasisSize; ++s) wave_diff = std::max(wave_diff, std::abs(w[s] - m.residual[s]));
        }
    }
    const bool pass = f_change <= 1e-10 && wave_diff <= 1e-10;
    return {pass, "F change under gauge " + fmt(f_change) + ", wave vs Maxwell " + fmt(wave_diff) + " (limit 1e-10)"};
}

Outcome lagrangian() {
    Rng rng(8087);
    double forms = 0.0;
    for (int n = 0; n < 10; ++n) {
        const PotentialField a = n % 2 ? random_trig_potential(rng) : random_polynomial_potential(rng, 3);
        const CurrentDensity j = random_polynomial_current(rng, 2);
        for (const Event& e : samples(8088 + n, 20)) {
            // A large tol so the comparison is made here rather than inside.
            const LagrangianForms l = lagrangian_density(a, j, e, kAnalytic, 1.0);
            forms = std::max(forms, std::abs(l.component - l.cq));
        }
    }

    double invariants = 0.0;
    for (int n = 0; n < 2000; ++n) {
        const CQNumber f = make_field_strength({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)},
                                               {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
        const FieldInvariants before = field_invariants(f);
        const FieldInvariants after = field_invariants(apply_field_strength(rng.rotor_chain(5), f));
        invariants = std::max({invariants, std::abs(before.e2_minus_b2 - after.e2_minus_b2),
                               std::abs(before.e_dot_b - after.e_dot_b)});
    }

    // S(A + e dA) - S(A) - e P should shrink like e^2 when P = -Integral <DF + J, dA>.
    const Box box{{0.1, -0.1, 0.2, 0.0}, 0.5};
    const PotentialField a = random_polynomial_potential(rng, 2);
    const CurrentDensity j = random_polynomial_current(rng, 2);
    const PotentialField da = bump_perturbation(rng, box);
    const double p = stationarity_pairing(a, j, da, box, kAnalytic);
    const double s0 = action(a, j, box, kAnalytic);
    auto remainder = [&](double eps) { return std::abs(action(perturbed(a, da, eps), j, box, kAnalytic) - s0 - eps * p); };
    const double r1 = remainder(0.1), r2 = remainder(0.05);
    const double order = std::log(r1 / r2) / std::log(2.0);
    const double central = (action(perturbed(a, da, 0.05), j, box, kAnalytic) -
                            action(perturbed(a, da, -0.05), j, box, kAnalytic)) / 0.1;
    const double rel = std::abs(central - p) / std::abs(p);

    const bool pass = forms <= 1e-12 && invariants <= 1e-10 && order >= 1.9 && order <= 2.1 && rel <= 1e-8;
    return {pass, "forms " + fmt(forms) + " (limit 1e-12), invariants " + fmt(invariants) +
                      " (limit 1e-10), variation remainder order " + fmt(order) + ", slope error " + fmt(rel)};
}

Outcome df_imaginary() {
    Rng rng(9091);
    double worst = 0.0;
    std::size_t points = 0;
    for (int n = 0; n < 6; ++n) {
        const PotentialField a = n % 2 ? random_trig_potential(rng) : random_polynomial_potential(rng, 3);
        for (const MaxwellEntry& m : maxwell_report(a, random_polynomial_current(rng, 2), samples(9092 + n, 32), kAnalytic).entries) {
            worst = std::max(worst, m.df_imaginary_defect);
            ++points;
        }
    }
    return {worst <= 1e-10, std::to_string(points) + " points, max |DF + conj(DF)*| " + fmt(worst)};
}

struct Captured {
    int code = -1;
    std::string out;
};

Captured run_binary(const std::string& binary, const std::string& args) {
    Captured c;
    FILE* p = popen((binary + " " + args).c_str(), "r");
    if (!p) return c;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) c.out.append(buf.data(), n);
    const int status = pclose(p);
    c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return c;
}

Captured run_in_process() {
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run({"verify-identities", "--seed", "42", "--json"}, in, out, err);
    return {code, out.str()};
}

Outcome cli_determinism(const std::string& binary) {
    const Captured a = binary.empty() ? run_in_process() : run_binary(binary, "verify-identities --seed 42 --json");
    const Captured b = binary.empty() ? run_in_process() : run_binary(binary, "verify-identities --seed 42 --json");
    const bool identical = !a.out.empty() && a.out == b.out;
    bool all_pass = false;
    try {
        all_pass = io::json::parse(a.out).at("pass").get<bool>();
    } catch (const std::exception&) {
    }
    const bool pass = identical && a.code == 0 && b.code == 0 && all_pass;
    return {pass, std::string(identical ? "identical" : "different") + " output (" + std::to_string(a.out.size()) +
                      " bytes), exit codes " + std::to_string(a.code) + "/" + std::to_string(b.code) +
                      (all_pass ? ", all checks pass" : ", report not passing")};
}

}  // namespace

int main(int argc, char** argv) {
    const std::string binary = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"basis multiplication", basis_products},
        {"conjugation laws", conjugation_laws},
        {"Lorentz matrix oracle", lorentz_oracle},
        {"group structure", group_structure},
        {"Maxwell equivalence", maxwell_equivalence},
        {"finite-difference convergence", fd_convergence},
        {"gauge invariance and Lorenz reduction", gauge},
        {"Lagrangian", lagrangian},
        {"DF purely imaginary", df_imaginary},
        {"CLI determinism", [&] { return cli_determinism(binary); }},
    };
    int failures = 0;
    for (std::size_t n = 0; n < criteria.size(); ++n) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[n].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::printf("%s %2zu %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", n + 1, criteria[n].first.c_str(),
                    o.detail.c_str(), secs);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
