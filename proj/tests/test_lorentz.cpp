#include "doctest.h"

#include <cmath>
#include <numbers>

#include "cqrel/electrodynamics.hpp"
#include "cqrel/errors.hpp"
#include "cqrel/lorentz.hpp"
#include "cqrel/random.hpp"
#include "oracles.hpp"

using namespace cqrel;
using std::numbers::pi;

namespace {

double event_error(const Event& a, const Event& b) {
    double m = 0.0;
    for (std::size_t ax = 0; ax < 4; ++ax) m = std::max(m, std::abs(a[ax] - b[ax]));
    return m;
}

}  // namespace

TEST_CASE("unit directions") {
    const UnitDirection d(0, 3, 4);
    CHECK(d.x() == 0.0);
    CHECK(d.y() == doctest::Approx(0.6));
    CHECK(d.z() == doctest::Approx(0.8));
    CHECK_THROWS_AS(UnitDirection(0, 0, 0), InvalidDirection);
    CHECK_THROWS_AS(UnitDirection(std::nan(""), 0, 1), InvalidDirection);
    CHECK_THROWS_AS(UnitDirection(INFINITY, 0, 0), InvalidDirection);
}

TEST_CASE("rotor construction and checks") {
    CHECK(Rotor().value().c == units::one.c);
    CHECK(rotor_rotation({0, 0, 1}, 0.0).value().c == units::one.c);
    CHECK(rotor_boost({1, 0, 0}, 0.0).value().c == units::one.c);
    CHECK(distance(rotor_rotation({0, 0, 1}, 2 * pi).value(), -units::one) <= 1e-15);

    CHECK_THROWS_AS(Rotor::from_value(CQNumber::scalar(2.0)), NotARotor);
    CHECK_THROWS_AS(Rotor::from_value(units::one + units::at), NotARotor);
    CHECK_NOTHROW(Rotor::from_value(units::i));
    CHECK_NOTHROW(Rotor::from_value(rotor_boost({1, 2, 3}, 0.7).value()));

    const Rotor scaled = Rotor::unchecked(scale(rotor_boost({0, 1, 0}, 0.4).value(), 1.001));
    CHECK(scaled.norm_defect() > 1e-4);
    const Rotor fixed = scaled.renormalized();
    CHECK(fixed.norm_defect() <= 1e-15);
    CHECK(distance(fixed.value(), rotor_boost({0, 1, 0}, 0.4).value()) <= 1e-15);

    Rng rng(31);
    for (int n = 0; n < 200; ++n) {
        const Rotor w = rng.rotor_chain(8, 1.0);
        CHECK(w.norm_defect() <= 1e-12);
        const CQNumber nrm = w.norm();
        for (std::size_t idx = 2; idx < kBasisSize; ++idx) CHECK(std::abs(nrm[idx]) <= 1e-14);
    }
}

TEST_CASE("rotation examples") {
    // Right-hand rule: a quarter turn about z takes x to y.
    const Rotor w = rotor_rotation({0, 0, 1}, pi / 2);
    CHECK(event_error(apply_contravariant(w, Event{0, 1, 0, 0}), Event{0, 0, 1, 0}) <= 1e-15);
    CHECK(event_error(apply_contravariant(w, Event{0, 0, 1, 0}), Event{0, -1, 0, 0}) <= 1e-15);
    CHECK(event_error(apply_contravariant(w, Event{5, 0, 0, 1}), Event{5, 0, 0, 1}) <= 1e-15);

    const Rotor full = rotor_rotation({1, 1, 0}, 2 * pi);
    CHECK(event_error(apply_contravariant(full, Event{1, 2, 3, 4}), Event{1, 2, 3, 4}) <= 1e-14);
}

TEST_CASE("boost examples") {
    const double lam = 0.8;
    const Rotor w = rotor_boost({1, 0, 0}, lam);
    const Event got = apply_contravariant(w, Event{1, 0, 0, 0});
    CHECK(event_error(got, Event{std::cosh(lam), -std::sinh(lam), 0, 0}) <= 1e-15);
    // Transverse coordinates are untouched.
    CHECK(event_error(apply_contravariant(w, Event{0, 0, 2, 3}), Event{0, 0, 2, 3}) <= 1e-15);
    // A light ray stays on the light cone.
    CHECK(std::abs(proper_interval(apply_contravariant(w, Event{1, 1, 0, 0}))) <= 1e-14);
}

TEST_CASE("rotors agree with textbook matrices") {
    Rng rng(37);
    double worst = 0.0;
    for (int n = 0; n < 2000; ++n) {
        const UnitDirection d = rng.direction();
        const double angle = rng.uniform(-pi, pi);
        const double rapidity = rng.uniform(-1.5, 1.5);
        worst = std::max(worst, max_abs_difference(to_matrix(rotor_rotation(d, angle)),
                                                   oracle::rotation_matrix(d.x(), d.y(), d.z(), angle)));
        worst = std::max(worst, max_abs_difference(to_matrix(rotor_boost(d, rapidity)),
                                                   oracle::boost_matrix(d.x(), d.y(), d.z(), rapidity)));
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("to_matrix columns are images of basis events") {
    Rng rng(41);
    const Rotor w = rng.rotor_chain(5);
    const LorentzMatrix m = to_matrix(w);
    for (int n = 0; n < 50; ++n) {
        const Event e = rng.event(-2, 2);
        CHECK(event_error(m.apply(e), apply_contravariant(w, e)) <= 1e-13);
    }
    CHECK(m.metric_defect() <= 1e-12);
    CHECK(max_abs_difference(to_matrix(Rotor()), LorentzMatrix::identity()) == 0.0);
}

TEST_CASE("group structure") {
    Rng rng(43);
    for (int n = 0; n < 500; ++n) {
        const Rotor w1 = rng.rotor_chain(3), w2 = rng.rotor_chain(3);
        CHECK(max_abs_difference(to_matrix(compose(w2, w1)), to_matrix(w2) * to_matrix(w1)) <= 1e-10);
        const Event e = rng.event();
        CHECK(event_error(apply_contravariant(compose(w2, w1), e),
                          apply_contravariant(w2, apply_contravariant(w1, e))) <= 1e-12);
        CHECK(max_abs_difference(to_matrix(w1), to_matrix(-w1)) == 0.0);
    }

    // Collinear boosts add rapidities; coaxial rotations add angles.
    const double a = 0.3, b = -1.1;
    CHECK(distance(compose(rotor_boost({1, 0, 0}, a), rotor_boost({1, 0, 0}, b)).value(),
                   rotor_boost({1, 0, 0}, a + b).value()) <= 1e-15);
    CHECK(distance(compose(rotor_rotation({0, 1, 0}, a), rotor_rotation({0, 1, 0}, b)).value(),
                   rotor_rotation({0, 1, 0}, a + b).value()) <= 1e-15);
}

TEST_CASE("two transverse boosts produce a Wigner rotation") {
    const Rotor w = compose(rotor_boost({0, 1, 0}, 0.9), rotor_boost({1, 0, 0}, 0.9));
    const LorentzMatrix m = to_matrix(w);
    // A pure boost has a symmetric matrix; the composite does not.
    double asym = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) asym = std::max(asym, std::abs(m(r, c) - m(c, r)));
    CHECK(asym > 1e-2);
    CHECK(m.metric_defect() <= 1e-13);
}

TEST_CASE("covariant transformation") {
    Rng rng(47);
    for (int n = 0; n < 200; ++n) {
        const Rotor w = rng.rotor_chain(4);
        const CQNumber q = rng.minkowski();
        const CQNumber transformed = apply_contravariant(w, q);
        CHECK(distance(apply_covariant(w, conj_quaternion(q)), conj_quaternion(transformed)) <= 1e-12);
        CHECK(is_minkowski(apply_covariant(w, conj_quaternion(q)), 1e-12));
    }
    const CQNumber qbar = conj_quaternion(embed({1, 2, 3, 4}));
    CHECK(apply_covariant(Rotor(), qbar).c == qbar.c);
}

TEST_CASE("field strength under boosts matches the textbook field transformation") {
    const double lam = 0.6;
    const double g = std::cosh(lam);
    const double v = std::tanh(lam);
    const std::array<double, 3> e{0.3, -0.7, 1.1};
    const std::array<double, 3> b{-0.4, 0.9, 0.2};
    const CQNumber f2 = apply_field_strength(rotor_boost({1, 0, 0}, lam), make_field_strength(e, b));
    const ElectricMagnetic eb = extract_EB(f2);
    // Frame moving with velocity v along x.
    CHECK(eb.e[0] == doctest::Approx(e[0]).epsilon(1e-14));
    CHECK(eb.b[0] == doctest::Approx(b[0]).epsilon(1e-14));
    CHECK(eb.e[1] == doctest::Approx(g * (e[1] - v * b[2])).epsilon(1e-13));
    CHECK(eb.e[2] == doctest::Approx(g * (e[2] + v * b[1])).epsilon(1e-13));
    CHECK(eb.b[1] == doctest::Approx(g * (b[1] + v * e[2])).epsilon(1e-13));
    CHECK(eb.b[2] == doctest::Approx(g * (b[2] - v * e[1])).epsilon(1e-13));
}

TEST_CASE("field strength under rotations rotates E and B as vectors") {
    const std::array<double, 3> e{1, 0, 0};
    const std::array<double, 3> b{0, 0, 2};
    const ElectricMagnetic eb =
        extract_EB(apply_field_strength(rotor_rotation({0, 0, 1}, pi / 2), make_field_strength(e, b)));
    CHECK(std::abs(eb.e[0]) <= 1e-15);
    CHECK(eb.e[1] == doctest::Approx(1.0));
    CHECK(eb.b[2] == doctest::Approx(2.0));
}
