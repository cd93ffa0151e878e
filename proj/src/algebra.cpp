#include "cqrel/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace cqrel {

bool is_minkowski(const CQNumber& a, double tol) {
    return std::abs(a[kOne]) <= tol && std::abs(a[kAtI]) <= tol && std::abs(a[kAtJ]) <= tol &&
           std::abs(a[kAtK]) <= tol;
}

double max_abs(const CQNumber& a) {
    double m = 0.0;
    for (double v : a.c) m = std::max(m, std::abs(v));
    return m;
}

double distance(const CQNumber& a, const CQNumber& b) { return max_abs(a - b); }

bool approx_equal(const CQNumber& a, const CQNumber& b, double tol) { return distance(a, b) <= tol; }

}  // namespace cqrel
