#include "cqrel/variation.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <array>
#include <vector>

#include "cqrel/field_library.hpp"

namespace cqrel {

namespace {

constexpr unsigned kNodes = 8;

struct Rule {
    std::vector<double> x;
    std::vector<double> w;
};

const Rule& gauss_rule() {
    static const Rule rule = [] {
        using G = boost::math::quadrature::gauss<double, kNodes>;
        Rule r;
        const auto& abscissa = G::abscissa();
        const auto& weights = G::weights();
        for (std::size_t n = 0; n < abscissa.size(); ++n) {
            r.x.push_back(abscissa[n]);
            r.w.push_back(weights[n]);
            if (abscissa[n] != 0.0) {
                r.x.push_back(-abscissa[n]);
                r.w.push_back(weights[n]);
            }
        }
        return r;
    }();
    return rule;
}

template <class Integrand>
double integrate(const Box& box, Integrand&& f) {
    const Rule& rule = gauss_rule();
    const std::size_t n = rule.x.size();
    const double hw = box.half_width;
    double total = 0.0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const Event e{box.center.t + hw * rule.x[a], box.center.x + hw * rule.x[b],
                                  box.center.y + hw * rule.x[c], box.center.z + hw * rule.x[d]};
                    total += rule.w[a] * rule.w[b] * rule.w[c] * rule.w[d] * f(e);
                }
    return total * hw * hw * hw * hw;
}

}  // namespace

double action(const PotentialField& a, const CurrentDensity& j, const Box& box, const DiffBackend& backend) {
    return integrate(box, [&](const Event& e) { return lagrangian_density(a, j, e, backend).cq; });
}

double stationarity_pairing(const PotentialField& a, const CurrentDensity& j, const PotentialField& da,
                            const Box& box, const DiffBackend& backend) {
    const CQField da_cq = da.as_cq();
    return integrate(box, [&](const Event& e) {
        const MaxwellEntry r = maxwell_residual(a, j, e, backend);
        return -scalar_product(CQNumber(r.residual), da_cq(e));
    });
}

PotentialField perturbed(const PotentialField& a, const PotentialField& da, double eps) {
    PotentialField r;
    r.phi = sum(a.phi, scaled(da.phi, eps));
    for (std::size_t i = 0; i < 3; ++i) r.a[i] = sum(a.a[i], scaled(da.a[i], eps));
    return r;
}

PotentialField bump_perturbation(Rng& rng, const Box& box) {
    std::array<SeparableExpr, 4> c;
    for (auto& expr : c) {
        SeparableTerm term;
        term.coeff = rng.uniform(-1.0, 1.0);
        for (std::size_t axis = 0; axis < 4; ++axis) term.factors[axis] = Factor::bump(box.center[axis], box.half_width);
        expr.add(term);
    }
    return potential_from(c);
}

}  // namespace cqrel
