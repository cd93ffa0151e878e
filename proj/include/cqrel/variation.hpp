#pragma once

// Action integrals over a spacetime box, used to check that DF + J is the
// stationarity direction of the Lagrangian density. With a perturbation dA of
// compact support inside the box,
//
//     d/de S[A + e dA] at e = 0  =  -Integral <DF + J, dA>
//
// where <p, q> is the Minkowski scalar product.

#include "cqrel/electrodynamics.hpp"
#include "cqrel/random.hpp"

namespace cqrel {

/// Hypercube center +- half_width along every axis.
struct Box {
    Event center;
    double half_width = 0.5;
};

/// Gauss-Legendre tensor quadrature of the Lagrangian density (8 nodes per axis).
double action(const PotentialField& a, const CurrentDensity& j, const Box& box, const DiffBackend& backend);

/// -Integral <DF + J, dA> over the box, same quadrature.
double stationarity_pairing(const PotentialField& a, const CurrentDensity& j, const PotentialField& da,
                            const Box& box, const DiffBackend& backend);

/// a + eps * da, componentwise.
PotentialField perturbed(const PotentialField& a, const PotentialField& da, double eps);

/// Random constant Minkowski direction times a C^3 bump supported exactly on the box.
PotentialField bump_perturbation(Rng& rng, const Box& box);

}  // namespace cqrel
