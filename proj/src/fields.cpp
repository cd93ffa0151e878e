#include "cqrel/fields.hpp"

#include <stdexcept>
#include <string>

namespace cqrel {

std::string_view mode_name(DiffMode mode) {
    switch (mode) {
        case DiffMode::kAnalytic: return "analytic";
        case DiffMode::kCentral2: return "fd2";
        case DiffMode::kCentral4: return "fd4";
    }
    return "unknown";
}

DiffMode parse_mode(std::string_view name) {
    if (name == "analytic") return DiffMode::kAnalytic;
    if (name == "fd2" || name == "central-2") return DiffMode::kCentral2;
    if (name == "fd4" || name == "central-4") return DiffMode::kCentral4;
    throw std::invalid_argument("unknown backend '" + std::string(name) + "' (expected analytic, fd2 or fd4)");
}

int stencil_order(DiffMode mode) {
    switch (mode) {
        case DiffMode::kAnalytic: return 0;
        case DiffMode::kCentral2: return 2;
        case DiffMode::kCentral4: return 4;
    }
    return 0;
}

ScalarField constant_field(double value) {
    return ScalarField([value](const Event&) { return value; }, [](const Event&, const MultiIndex&) { return 0.0; });
}

ScalarField sum(const ScalarField& a, const ScalarField& b) {
    ScalarField::DerivFn deriv;
    if (a.has_analytic() && b.has_analytic()) {
        deriv = [a, b](const Event& e, const MultiIndex& m) { return a.analytic(e, m) + b.analytic(e, m); };
    }
    return ScalarField([a, b](const Event& e) { return a(e) + b(e); }, deriv);
}

ScalarField scaled(const ScalarField& a, double s) {
    ScalarField::DerivFn deriv;
    if (a.has_analytic()) {
        deriv = [a, s](const Event& e, const MultiIndex& m) { return s * a.analytic(e, m); };
    }
    return ScalarField([a, s](const Event& e) { return s * a(e); }, deriv);
}

ScalarField differentiated(const ScalarField& f, std::size_t axis, const DiffBackend& backend) {
    return ScalarField([f, axis, backend](const Event& e) { return backend.partial(f, e, axis); },
                       [f, axis, backend](const Event& e, const MultiIndex& m) {
                           return backend.derivative(f, e, m.plus(axis));
                       });
}

CQField to_cq(const ScalarField& f) {
    CQField::DerivFn deriv;
    if (f.has_analytic()) {
        deriv = [f](const Event& e, const MultiIndex& m) { return CQNumber::scalar(f.analytic(e, m)); };
    }
    return CQField([f](const Event& e) { return CQNumber::scalar(f(e)); }, deriv);
}

}  // namespace cqrel
