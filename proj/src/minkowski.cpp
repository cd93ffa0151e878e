#include "cqrel/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cqrel/errors.hpp"

namespace cqrel {

namespace {

void require_minkowski(const CQNumber& m, double tol, const char* what) {
    if (!is_minkowski(m, tol)) {
        throw NotInMinkowskiSubspace(std::string(what) + ": value has a real or @e_i part (1: " +
                                     std::to_string(m[kOne]) + ", @i: " + std::to_string(m[kAtI]) +
                                     ", @j: " + std::to_string(m[kAtJ]) + ", @k: " +
                                     std::to_string(m[kAtK]) + ")");
    }
}

// Scalar part of a product that must be real; the remaining seven coefficients
// are checked against a magnitude-scaled tolerance.
double real_part_checked(const CQNumber& v, double scale_sq, double tol, const char* what) {
    const double limit = tol * std::max(1.0, scale_sq);
    for (std::size_t n = 1; n < kBasisSize; ++n) {
        if (std::abs(v[n]) > limit) {
            throw NotInMinkowskiSubspace(std::string(what) + ": expected a real result, coefficient " +
                                         std::to_string(n) + " is " + std::to_string(v[n]));
        }
    }
    return v[kOne];
}

double squared_size(const CQNumber& q) {
    double s = 0.0;
    for (double v : q.c) s += v * v;
    return s;
}

}  // namespace

Event project(const CQNumber& m, double tol) {
    require_minkowski(m, tol, "project");
    return {m[kAt], m[kI], m[kJ], m[kK]};
}

double proper_interval(const CQNumber& q, double tol) {
    require_minkowski(q, tol, "proper_interval");
    const CQNumber v = -(conj_quaternion(q) * q);
    return real_part_checked(v, squared_size(q), tol, "proper_interval");
}

double proper_interval(const Event& e) { return proper_interval(embed(e), 0.0); }

double scalar_product(const CQNumber& p, const CQNumber& q, double tol) {
    require_minkowski(p, tol, "scalar_product");
    require_minkowski(q, tol, "scalar_product");
    const CQNumber v = scale(conj_quaternion(p) * q + conj_quaternion(q) * p, -0.5);
    return real_part_checked(v, std::sqrt(squared_size(p) * squared_size(q)), tol, "scalar_product");
}

double scalar_product(const Event& p, const Event& q) { return scalar_product(embed(p), embed(q), 0.0); }

}  // namespace cqrel
