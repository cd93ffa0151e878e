#pragma once

// Seeded generator with platform-independent output. std::mt19937_64 is fully
// specified by the standard; the distributions below are hand-rolled because
// the library's distributions are not.

#include <cstdint>
#include <random>

#include "cqrel/algebra.hpp"
#include "cqrel/lorentz.hpp"
#include "cqrel/minkowski.hpp"

namespace cqrel {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi].
    int integer(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(engine_() % span);
    }

    CQNumber cq(double lo = -1.0, double hi = 1.0);
    Event event(double lo = -1.0, double hi = 1.0);
    CQNumber minkowski(double lo = -1.0, double hi = 1.0) { return embed(event(lo, hi)); }

    /// Uniform on the unit sphere (rejection sampling from the cube).
    UnitDirection direction();

    /// A rotation with angle in [-pi, pi] or a boost with rapidity in
    /// [-max_rapidity, max_rapidity], with equal probability.
    Rotor elementary_rotor(double max_rapidity = 1.0);

    /// Product of 1..max_factors elementary rotors.
    Rotor rotor_chain(int max_factors, double max_rapidity = 1.0);

  private:
    std::mt19937_64 engine_;
};

}  // namespace cqrel
