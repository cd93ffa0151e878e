#include "cqrel/random.hpp"

#include <numbers>

namespace cqrel {

CQNumber Rng::cq(double lo, double hi) {
    CQNumber v;
    for (double& c : v.c) c = uniform(lo, hi);
    return v;
}

Event Rng::event(double lo, double hi) {
    Event e;
    for (std::size_t a = 0; a < 4; ++a) e[a] = uniform(lo, hi);
    return e;
}

UnitDirection Rng::direction() {
    for (;;) {
        const double x = uniform(-1.0, 1.0);
        const double y = uniform(-1.0, 1.0);
        const double z = uniform(-1.0, 1.0);
        const double r2 = x * x + y * y + z * z;
        if (r2 > 1e-4 && r2 <= 1.0) return UnitDirection(x, y, z);
    }
}

Rotor Rng::elementary_rotor(double max_rapidity) {
    const UnitDirection n = direction();
    if (uniform() < 0.5) return rotor_rotation(n, uniform(-std::numbers::pi, std::numbers::pi));
    return rotor_boost(n, uniform(-max_rapidity, max_rapidity));
}

Rotor Rng::rotor_chain(int max_factors, double max_rapidity) {
    const int factors = integer(1, max_factors);
    Rotor w;
    for (int n = 0; n < factors; ++n) w = compose(elementary_rotor(max_rapidity), w);
    return w;
}

}  // namespace cqrel
