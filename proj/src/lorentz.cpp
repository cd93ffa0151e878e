#include "cqrel/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "cqrel/errors.hpp"

namespace cqrel {

UnitDirection::UnitDirection(double nx, double ny, double nz) {
    const double len = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (!std::isfinite(len) || len == 0.0) {
        throw InvalidDirection("direction must be a finite, non-zero 3-vector");
    }
    n_ = {nx / len, ny / len, nz / len};
}

Rotor Rotor::from_value(const CQNumber& value, double tol) {
    Rotor r(value);
    const double defect = r.norm_defect();
    if (!(defect <= tol)) {
        throw NotARotor("w w̄ deviates from 1 by " + std::to_string(defect));
    }
    return r;
}

CQNumber Rotor::norm() const { return value_ * conj_quaternion(value_); }

double Rotor::norm_defect() const { return distance(norm(), CQNumber::scalar(1.0)); }

Rotor Rotor::renormalized() const {
    const CQNumber n = norm();
    // w w̄ lies in span{1, @}, which is a copy of the complex numbers and
    // commutes with everything, so dividing by its square root is well defined.
    const std::complex<double> root = std::sqrt(std::complex<double>(n[kOne], n[kAt]));
    const std::complex<double> inv = 1.0 / root;
    const CQNumber factor{inv.real(), inv.imag(), 0, 0, 0, 0, 0, 0};
    return Rotor(factor * value_);
}

LorentzMatrix LorentzMatrix::identity() {
    LorentzMatrix r;
    for (std::size_t n = 0; n < 4; ++n) r.m[n][n] = 1.0;
    return r;
}

Event LorentzMatrix::apply(const Event& e) const {
    Event r;
    for (std::size_t row = 0; row < 4; ++row) {
        double s = 0.0;
        for (std::size_t col = 0; col < 4; ++col) s += m[row][col] * e[col];
        r[row] = s;
    }
    return r;
}

LorentzMatrix LorentzMatrix::operator*(const LorentzMatrix& rhs) const {
    LorentzMatrix r;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            double s = 0.0;
            for (std::size_t n = 0; n < 4; ++n) s += m[a][n] * rhs.m[n][b];
            r.m[a][b] = s;
        }
    return r;
}

double LorentzMatrix::metric_defect() const {
    constexpr std::array<double, 4> g{1.0, -1.0, -1.0, -1.0};
    double worst = 0.0;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            double s = 0.0;
            for (std::size_t n = 0; n < 4; ++n) s += m[n][a] * g[n] * m[n][b];
            const double expected = a == b ? g[a] : 0.0;
            worst = std::max(worst, std::abs(s - expected));
        }
    return worst;
}

double max_abs_difference(const LorentzMatrix& a, const LorentzMatrix& b) {
    double worst = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) worst = std::max(worst, std::abs(a.m[r][c] - b.m[r][c]));
    return worst;
}

Rotor rotor_rotation(const UnitDirection& n, double theta) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    return Rotor::unchecked({c, 0, s * n.x(), s * n.y(), s * n.z(), 0, 0, 0});
}

Rotor rotor_boost(const UnitDirection& n, double rapidity) {
    const double c = std::cosh(0.5 * rapidity);
    const double s = std::sinh(0.5 * rapidity);
    return Rotor::unchecked({c, 0, 0, 0, 0, s * n.x(), s * n.y(), s * n.z()});
}

CQNumber apply_contravariant(const Rotor& w, const CQNumber& q) {
    return w.value() * q * conj_both(w.value());
}

Event apply_contravariant(const Rotor& w, const Event& e) {
    return project(apply_contravariant(w, embed(e)));
}

CQNumber apply_covariant(const Rotor& w, const CQNumber& qbar) {
    return conj_complex(w.value()) * qbar * conj_quaternion(w.value());
}

CQNumber apply_field_strength(const Rotor& w, const CQNumber& f) {
    return conj_complex(w.value()) * f * conj_both(w.value());
}

Rotor compose(const Rotor& w2, const Rotor& w1) { return Rotor::unchecked(w2.value() * w1.value()); }

LorentzMatrix to_matrix(const Rotor& w) {
    LorentzMatrix r;
    for (std::size_t col = 0; col < 4; ++col) {
        Event basis;
        basis[col] = 1.0;
        const Event image = apply_contravariant(w, basis);
        for (std::size_t row = 0; row < 4; ++row) r.m[row][col] = image[row];
    }
    return r;
}

}  // namespace cqrel
